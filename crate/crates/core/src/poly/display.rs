use std::fmt;

use super::MultiPoly;

/// `x1, ..., xn`.
pub fn default_var_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// Canonical text form: terms in descending degrevlex order, least-residue
/// decimal coefficients, unit coefficients omitted, `^` for powers.
pub struct PolyDisplay<'a> {
    poly: &'a MultiPoly,
    names: Option<&'a [String]>,
}

impl<'a> PolyDisplay<'a> {
    pub(super) fn new(poly: &'a MultiPoly, names: Option<&'a [String]>) -> Self {
        if let Some(names) = names {
            assert_eq!(names.len(), poly.nvars(), "variable name count");
        }
        PolyDisplay { poly, names }
    }
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let defaults;
        let names = match self.names {
            Some(n) => n,
            None => {
                defaults = default_var_names(self.poly.nvars());
                &defaults
            }
        };
        for (k, (m, c)) in self.poly.terms().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let mut factors = Vec::new();
            if c != 1 || m.is_one() {
                factors.push(c.to_string());
            }
            for (name, &e) in names.iter().zip(m.exponents()) {
                match e {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}
