//! Picard-Fuchs operators from linear dependence of `∇`-iterates.

use num_traits::{Signed, Zero};

use crate::algebra::matrix::{kernel, rank, transpose};
use crate::algebra::{rational_content, render_coefficient, MultiPoly, TFrac, TPoly};
use crate::brieskorn::{Module, ModuleClass, TameContext};
use crate::error::{Error, Result};
use crate::gauss_manin::GaussManin;

/// `Σ p_i(t) ∂^i/∂t^i`, lowest order first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PFEquation {
    pub coeffs: Vec<TPoly>,
    pub order: usize,
    /// `coeffs` padded with zeros to length `μ + 1`.
    pub padded: Vec<TPoly>,
}

impl PFEquation {
    pub fn render(&self) -> Vec<String> {
        self.padded.iter().map(render_coefficient).collect()
    }
}

/// A polynomial relation `Σ c_i rows_i = 0` with integer coefficients of
/// content one and positive leading coefficient in its first nonzero entry.
pub fn lin_dep_over_qt(rows: &[Vec<TFrac>]) -> Option<Vec<TPoly>> {
    if rows.is_empty() {
        return None;
    }
    let ker = kernel(&transpose(rows), rows.len());
    let v = ker.into_iter().next()?;
    let mut out = clear_denominators(&v);
    if let Some(first) = out.iter().find(|p| !p.is_zero()) {
        if first.lc().is_negative() {
            out = out.iter().map(|p| -p).collect();
        }
    }
    Some(out)
}

fn clear_denominators(v: &[TFrac]) -> Vec<TPoly> {
    let l = v.iter().fold(TPoly::one(), |acc, x| acc.lcm(x.den()));
    let polys: Vec<TPoly> = v.iter().map(|x| x.num() * &l.exact_div(x.den())).collect();
    let g = polys
        .iter()
        .filter(|p| !p.is_zero())
        .fold(TPoly::zero(), |acc, p| if acc.is_zero() { p.monic() } else { acc.gcd(p) });
    let polys: Vec<TPoly> = if g.is_zero() {
        polys
    } else {
        polys.iter().map(|p| p.exact_div(&g)).collect()
    };
    let cont = rational_content(polys.iter().flat_map(|p| p.coeffs().iter()));
    if cont.is_zero() {
        return polys;
    }
    polys.iter().map(|p| p.scale(&cont.recip())).collect()
}

/// The minimal operator annihilating `∫ P dx / (f − t)`.
pub fn pfeq(ctx: &TameContext, p: &MultiPoly, s: Option<TPoly>) -> Result<PFEquation> {
    let gm = match s {
        Some(s) => GaussManin::with_s(ctx, s)?,
        None => GaussManin::new(ctx)?,
    };
    pfeq_with(&gm, p)
}

pub fn pfeq_with(gm: &GaussManin<'_>, p: &MultiPoly) -> Result<PFEquation> {
    let class = gm.class_of_top(p)?;
    if class.is_zero() {
        return Err(Error::ZeroInput("the class of P dx vanishes in H''".into()));
    }
    pfeq_of_class(gm, &class)
}

/// Picard-Fuchs operator of an arbitrary class of H''.
pub fn pfeq_of_class(gm: &GaussManin<'_>, class: &ModuleClass) -> Result<PFEquation> {
    if class.module != Module::Second {
        return Err(Error::Precondition("Picard-Fuchs rows live in H''".into()));
    }
    let mu = gm.ctx().mu();
    let mut rows = vec![class.coords.clone()];
    let mut cur = class.clone();
    loop {
        cur = gm.nabla(&cur)?;
        rows.push(cur.coords.clone());
        if rank(&rows) < rows.len() {
            break;
        }
        if rows.len() > mu + 1 {
            return Err(Error::Precondition("no dependence within the Milnor number".into()));
        }
    }
    let mut coeffs = lin_dep_over_qt(&rows).ok_or(Error::SingularBasis)?;
    if coeffs.last().is_some_and(|p| p.lc().is_negative()) {
        coeffs = coeffs.iter().map(|p| -p).collect();
    }
    let order = coeffs.len() - 1;
    let mut padded = coeffs.clone();
    padded.resize(mu + 1, TPoly::zero());
    Ok(PFEquation { coeffs, order, padded })
}

/// Applies the operator to coordinate rows, returning `Σ p_i r_i`.
pub fn apply_to_rows(eq: &PFEquation, rows: &[Vec<TFrac>]) -> Vec<TFrac> {
    let mu = rows.first().map_or(0, Vec::len);
    let mut acc = vec![TFrac::zero(); mu];
    for (p, r) in eq.coeffs.iter().zip(rows) {
        let pf = TFrac::from_poly(p.clone());
        for (a, x) in acc.iter_mut().zip(r) {
            *a = &*a + &(&pf * x);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{qq, WeightedVars};

    fn fr(p: &[i64]) -> TFrac {
        TFrac::from_poly(TPoly::from_i64(p))
    }

    #[test]
    fn relations() {
        let r = lin_dep_over_qt(&[vec![fr(&[1]), fr(&[])], vec![fr(&[]), fr(&[1])], vec![fr(&[1]), fr(&[1])]]);
        assert_eq!(r.unwrap(), [TPoly::from_i64(&[1]), TPoly::from_i64(&[1]), TPoly::from_i64(&[-1])]);
        let r = lin_dep_over_qt(&[vec![fr(&[0, 1]), fr(&[1])], vec![fr(&[0, 0, 1]), fr(&[0, 1])]]);
        assert_eq!(r.unwrap(), [TPoly::from_i64(&[0, 1]), TPoly::from_i64(&[-1])]);
        assert!(lin_dep_over_qt(&[vec![fr(&[1]), fr(&[])], vec![fr(&[]), fr(&[1])]]).is_none());
    }

    #[test]
    fn quintic_equation() {
        let ctx = TameContext::new(
            MultiPoly::from_int_terms(1, &[(1, &[5]), (-5, &[1])]),
            WeightedVars::standard(&["x"]).unwrap(),
        )
        .unwrap();
        let eq = pfeq(&ctx, &MultiPoly::one(1), None).unwrap();
        assert_eq!(eq.render(), ["6144", "(35625t)", "(33375t2)", "(8750t3)", "(625t4-160000)"]);
        assert_eq!(eq.order, 4);
    }

    #[test]
    fn triangle_equation() {
        let ctx = TameContext::new(
            MultiPoly::from_int_terms(2, &[(1, &[2, 1]), (1, &[1, 2]), (-1, &[1, 1])]),
            WeightedVars::standard(&["x", "y"]).unwrap(),
        )
        .unwrap();
        let s = TPoly::from_coeffs(vec![qq(0, 1), qq(1, 27), qq(1, 1)]);
        let eq = pfeq(&ctx, &MultiPoly::one(2), Some(s)).unwrap();
        assert_eq!(eq.render(), ["6", "(54t+1)", "(27t2+t)", "0", "0"]);
    }

    #[test]
    fn quadric_is_constant() {
        let ctx = TameContext::new(
            MultiPoly::from_int_terms(2, &[(1, &[2, 0]), (1, &[0, 2])]),
            WeightedVars::standard(&["x", "y"]).unwrap(),
        )
        .unwrap();
        let eq = pfeq(&ctx, &MultiPoly::one(2), None).unwrap();
        assert_eq!(eq.render(), ["0", "1"]);
        assert!(matches!(pfeq(&ctx, &MultiPoly::zero(2), None), Err(Error::ZeroInput(_))));
    }
}
