use super::MultiPoly;

impl MultiPoly {
    /// Exact quotient `self / divisor`, or `None` if `divisor` does not divide
    /// `self`. The divisor's leading coefficient must be a unit.
    ///
    /// A single polynomial is a Groebner basis of the ideal it generates, so
    /// a zero remainder from multivariate division decides divisibility.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        self.check_compatible(divisor).ok()?;
        let (lm, lc) = divisor.leading_term()?;
        let lm = lm.clone();
        let lc_inv = self.ring.inv(lc)?;
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.ring.clone(), self.nvars);
        while let Some((m, c)) = rem.leading_term() {
            let shift = lm.quotient_of(m)?;
            let factor = self.ring.mul(c, lc_inv);
            let t = MultiPoly::term(self.ring.clone(), shift, factor as i64);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Some(quot)
    }
}
