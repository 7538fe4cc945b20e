#![allow(dead_code)]

pub mod oracle;

use froblift::{MultiPoly, Prime, Zmod};

pub fn prime(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

pub fn fp(p: u64) -> Zmod {
    Zmod::fp(prime(p))
}

pub fn zp2(p: u64) -> Zmod {
    Zmod::zp2(prime(p))
}

pub fn var(ring: &Zmod, n: usize, i: usize) -> MultiPoly {
    MultiPoly::var(ring.clone(), n, i)
}
