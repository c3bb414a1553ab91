use std::collections::HashSet;

use crate::error::{Error, Result};

use super::{Monomial, MultiPoly};

/// Variable names with positive integer weights `α_i`; `n + 1` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedVars {
    names: Vec<String>,
    alpha: Vec<u32>,
}

impl WeightedVars {
    pub fn new(names: Vec<String>, alpha: Vec<u32>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::BadWeights("no variables".into()));
        }
        if names.len() != alpha.len() {
            return Err(Error::BadWeights(format!(
                "{} variables but {} weights",
                names.len(),
                alpha.len()
            )));
        }
        if alpha.contains(&0) {
            return Err(Error::BadWeights("weights must be positive".into()));
        }
        let mut seen = HashSet::new();
        for n in &names {
            if n == "t" {
                return Err(Error::ReservedVariable);
            }
            if !seen.insert(n.as_str()) {
                return Err(Error::BadWeights(format!("duplicate variable {n}")));
            }
        }
        Ok(WeightedVars { names, alpha })
    }

    /// Unit weights for the given names.
    pub fn standard(names: &[&str]) -> Result<Self> {
        Self::new(
            names.iter().map(|s| s.to_string()).collect(),
            vec![1; names.len()],
        )
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn alpha(&self) -> &[u32] {
        &self.alpha
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    /// Dimension index `n` (number of variables minus one).
    pub fn n(&self) -> usize {
        self.names.len() - 1
    }

    fn check(&self, p: &MultiPoly) -> Result<()> {
        if p.nvars() != self.nvars() {
            return Err(Error::LengthMismatch {
                expected: self.nvars(),
                found: p.nvars(),
            });
        }
        Ok(())
    }

    /// Weighted degree; `None` stands for minus infinity.
    pub fn wdeg(&self, p: &MultiPoly) -> Result<Option<u64>> {
        self.check(p)?;
        Ok(p.wdeg(&self.alpha))
    }

    /// Top weighted-homogeneous piece.
    pub fn lasthomo(&self, f: &MultiPoly) -> Result<MultiPoly> {
        self.check(f)?;
        let d = f
            .wdeg(&self.alpha)
            .ok_or_else(|| Error::ZeroInput("lasthomo of the zero polynomial".into()))?;
        Ok(f.homogeneous_part(&self.alpha, d))
    }

    /// `Σ f_i x0^{d-i}` in the variables `(x0, x)` with `deg x0 = 1`.
    pub fn homogenize(&self, f: &MultiPoly) -> Result<MultiPoly> {
        self.check(f)?;
        let d = f
            .wdeg(&self.alpha)
            .ok_or_else(|| Error::ZeroInput("homogenize of the zero polynomial".into()))?;
        let lifted = f.prepend_var();
        let mut out = MultiPoly::zero(self.nvars() + 1);
        for (m, c) in lifted.terms() {
            let mut e = m.exponents().to_vec();
            e[0] = (d - m.wdeg(&self.lifted_alpha())) as u32;
            out.add_term(Monomial::from_exponents(e), c.clone());
        }
        Ok(out)
    }

    /// Weights of `(x0, x)` with `α_0 = 1`.
    pub fn lifted_alpha(&self) -> Vec<u32> {
        let mut a = Vec::with_capacity(self.alpha.len() + 1);
        a.push(1);
        a.extend_from_slice(&self.alpha);
        a
    }
}
