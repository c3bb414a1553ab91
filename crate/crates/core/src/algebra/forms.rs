//! Polynomial differential forms in `m = n + 1` variables.
//!
//! Variables are indexed from zero. `dx` is `dx_0 ∧ … ∧ dx_n`.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::{qq, Monomial, MultiPoly, Rational};

/// Top form `P dx`, stored as its coefficient `P`.
pub type FormTop = MultiPoly;

/// `n`-form `Σ c_k (-1)^k dx̂_k`. For one variable this is a function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormN {
    comps: Vec<MultiPoly>,
}

/// `(n-1)`-form `Σ_{i<j} c_{ij} dx̂_{i,j}`. For two variables the single
/// component `(0,1)` is a function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormNm1 {
    nvars: usize,
    comps: BTreeMap<(usize, usize), MultiPoly>,
}

impl FormN {
    pub fn zero(nvars: usize) -> Self {
        FormN {
            comps: vec![MultiPoly::zero(nvars); nvars],
        }
    }

    pub fn from_comps(comps: Vec<MultiPoly>) -> Self {
        let m = comps.len();
        assert!(comps.iter().all(|c| c.nvars() == m), "component arity");
        FormN { comps }
    }

    /// The Euler form `η = Σ w_i x_i (-1)^i dx̂_i` with `w_i = α_i / d`.
    pub fn eta(alpha: &[u32], d: u64) -> Self {
        let m = alpha.len();
        FormN {
            comps: (0..m)
                .map(|i| {
                    MultiPoly::term(Monomial::var(m, i), qq(alpha[i] as i64, d as i64))
                })
                .collect(),
        }
    }

    /// `x^β η`.
    pub fn eta_beta(alpha: &[u32], d: u64, beta: &Monomial) -> Self {
        Self::eta(alpha, d).mul_poly(&MultiPoly::term(beta.clone(), Rational::from_integer(1.into())))
    }

    pub fn nvars(&self) -> usize {
        self.comps.len()
    }

    pub fn comps(&self) -> &[MultiPoly] {
        &self.comps
    }

    pub fn comp(&self, k: usize) -> &MultiPoly {
        &self.comps[k]
    }

    pub fn comp_mut(&mut self, k: usize) -> &mut MultiPoly {
        &mut self.comps[k]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(MultiPoly::is_zero)
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> Self {
        FormN {
            comps: self.comps.iter().map(|c| c * p).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        FormN {
            comps: self.comps.iter().map(|x| x.scale(c)).collect(),
        }
    }

    pub fn add(&self, other: &FormN) -> Self {
        FormN {
            comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &FormN) -> Self {
        FormN {
            comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a - b).collect(),
        }
    }

    /// Highest weighted degree of the form, counting `deg dx_i = α_i`.
    pub fn wdeg(&self, alpha: &[u32]) -> Option<u64> {
        let total: u64 = alpha.iter().map(|&a| a as u64).sum();
        self.comps
            .iter()
            .enumerate()
            .filter_map(|(k, c)| c.wdeg(alpha).map(|e| e + total - alpha[k] as u64))
            .max()
    }

    /// Part of weighted degree exactly `deg`, same convention as [`FormN::wdeg`].
    pub fn homogeneous_part(&self, alpha: &[u32], deg: u64) -> Self {
        let total: u64 = alpha.iter().map(|&a| a as u64).sum();
        FormN {
            comps: self
                .comps
                .iter()
                .enumerate()
                .map(|(k, c)| match (deg + alpha[k] as u64).checked_sub(total) {
                    Some(e) => c.homogeneous_part(alpha, e),
                    None => MultiPoly::zero(c.nvars()),
                })
                .collect(),
        }
    }
}

impl FormNm1 {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars >= 2, "(n-1)-forms need at least two variables");
        FormNm1 {
            nvars,
            comps: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn comps(&self) -> &BTreeMap<(usize, usize), MultiPoly> {
        &self.comps
    }

    pub fn get(&self, i: usize, j: usize) -> MultiPoly {
        self.comps
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| MultiPoly::zero(self.nvars))
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    /// Adds `p dx̂_{i,j}` (`i < j`).
    pub fn add_comp(&mut self, i: usize, j: usize, p: &MultiPoly) {
        assert!(i < j && j < self.nvars);
        if p.is_zero() {
            return;
        }
        let e = self
            .comps
            .entry((i, j))
            .or_insert_with(|| MultiPoly::zero(self.nvars));
        *e += p;
        if e.is_zero() {
            self.comps.remove(&(i, j));
        }
    }

    pub fn add(&self, other: &FormNm1) -> Self {
        let mut out = self.clone();
        for ((i, j), p) in &other.comps {
            out.add_comp(*i, *j, p);
        }
        out
    }

    pub fn sub(&self, other: &FormNm1) -> Self {
        self.add(&other.scale(&qq(-1, 1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = FormNm1::zero(self.nvars);
        if c.is_zero() {
            return out;
        }
        for (k, p) in &self.comps {
            out.comps.insert(*k, p.scale(c));
        }
        out
    }

    pub fn mul_poly(&self, q: &MultiPoly) -> Self {
        let mut out = FormNm1::zero(self.nvars);
        for ((i, j), p) in &self.comps {
            out.add_comp(*i, *j, &(p * q));
        }
        out
    }
}

fn pair_sign(i: usize, j: usize) -> Rational {
    if (i + j).is_multiple_of(2) {
        qq(1, 1)
    } else {
        qq(-1, 1)
    }
}

/// Exterior derivative of an `n`-form, as the coefficient of `dx`.
pub fn dform_n(w: &FormN) -> FormTop {
    let mut out = MultiPoly::zero(w.nvars());
    for (k, c) in w.comps.iter().enumerate() {
        out += &c.derivative(k);
    }
    out
}

/// `df ∧ ω` for an `n`-form `ω`, as the coefficient of `dx`.
pub fn wedge_df_n(f: &MultiPoly, w: &FormN) -> FormTop {
    let mut out = MultiPoly::zero(w.nvars());
    for (k, c) in w.comps.iter().enumerate() {
        out += &(&f.derivative(k) * c);
    }
    out
}

fn apply_nm1(xi: &FormNm1, op: impl Fn(&MultiPoly, usize) -> MultiPoly) -> FormN {
    let mut out = FormN::zero(xi.nvars);
    for ((i, j), p) in &xi.comps {
        let s = pair_sign(*i, *j);
        out.comps[*j] += &op(p, *i).scale(&s);
        out.comps[*i] -= &op(p, *j).scale(&s);
    }
    out
}

/// Exterior derivative of an `(n-1)`-form.
pub fn dform(xi: &FormNm1) -> FormN {
    apply_nm1(xi, |p, k| p.derivative(k))
}

/// `df ∧ ξ` for an `(n-1)`-form `ξ`.
pub fn wedge_df_nm1(f: &MultiPoly, xi: &FormNm1) -> FormN {
    let partials = f.jacobian();
    apply_nm1(xi, |p, k| &partials[k] * p)
}

/// Contraction of an `n`-form with the weighted Euler field `Σ α_j x_j ∂_j`.
pub fn euler_contraction(w: &FormN, alpha: &[u32]) -> FormNm1 {
    let m = w.nvars();
    let mut out = FormNm1::zero(m);
    for (k, c) in w.comps.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for j in (0..m).filter(|&j| j != k) {
            let pos = if j < k { j } else { j - 1 };
            let sign = if (k + pos) % 2 == 0 { 1 } else { -1 };
            let term = c.mul_term(&Monomial::var(m, j), &qq(sign * alpha[j] as i64, 1));
            out.add_comp(k.min(j), k.max(j), &term);
        }
    }
    out
}

/// A primitive `ψ` with `dψ = ω` for a closed `n`-form `ω` (`n ≥ 1`),
/// obtained by contracting each weighted-homogeneous piece with the Euler field.
pub fn homotopy(w: &FormN, alpha: &[u32]) -> FormNm1 {
    let m = w.nvars();
    let total: u64 = alpha.iter().map(|&a| a as u64).sum();
    let mut out = FormNm1::zero(m);
    for (k, c) in w.comps.iter().enumerate() {
        for (mono, coef) in c.terms() {
            let s = mono.wdeg(alpha) + total - alpha[k] as u64;
            let mut single = FormN::zero(m);
            single.comps[k] = MultiPoly::term(mono.clone(), coef / qq(s as i64, 1));
            out = out.add(&euler_contraction(&single, alpha));
        }
    }
    out
}
