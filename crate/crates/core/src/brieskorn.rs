//! Tame polynomial contexts and reduction of differential forms to the
//! monomial bases `ω_β = x^β dx` of H'' and `η_β = x^β η` of H'.

use std::collections::HashMap;
use std::sync::RwLock;

use num_traits::{One, Zero};

use crate::algebra::forms::{self, dform, dform_n, euler_contraction, homotopy, wedge_df_n, wedge_df_nm1};
use crate::algebra::{qq, FormN, FormNm1, Monomial, MultiPoly, Rational, TFrac, TPoly, WeightedVars};
use crate::error::{Error, Result};
use crate::groebner::{GroebnerBasis, QuotientBasis};

/// Default cap on the total degree of forms handed to the reductions.
pub const DEFAULT_MAX_DEGREE: u64 = 64;

/// A validated tame polynomial with its Milnor basis and exponents `A_β`.
#[derive(Debug)]
pub struct TameContext {
    f: MultiPoly,
    g: MultiPoly,
    vars: WeightedVars,
    d: u64,
    basis: QuotientBasis,
    a_beta: Vec<Rational>,
    gb_g: GroebnerBasis,
    gb_f: GroebnerBasis,
    max_degree: u64,
    memo: RwLock<HashMap<Monomial, (Vec<TPoly>, FormNm1)>>,
    /// `g^k − f^k` for `k = 0, 1, …`, grown on demand.
    power_gaps: RwLock<Vec<MultiPoly>>,
}

/// Which Brieskorn module a class lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Module {
    /// H', basis `η_β`.
    Prime,
    /// H'', basis `ω_β`.
    Second,
}

/// A class in H' or H'' (possibly localized) as coordinates over Q(t).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleClass {
    pub module: Module,
    pub coords: Vec<TFrac>,
}

impl ModuleClass {
    pub fn zero(module: Module, mu: usize) -> Self {
        ModuleClass {
            module,
            coords: vec![TFrac::zero(); mu],
        }
    }

    pub fn unit(module: Module, mu: usize, i: usize) -> Self {
        let mut c = Self::zero(module, mu);
        c.coords[i] = TFrac::one();
        c
    }

    pub fn from_polys(module: Module, coeffs: &[TPoly]) -> Self {
        ModuleClass {
            module,
            coords: coeffs.iter().cloned().map(TFrac::from_poly).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(TFrac::is_zero)
    }

    pub fn scale(&self, c: &TFrac) -> Self {
        ModuleClass {
            module: self.module,
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &ModuleClass) -> Self {
        assert_eq!(self.module, other.module);
        ModuleClass {
            module: self.module,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    /// Least common denominator of the coordinates (monic).
    pub fn denominator(&self) -> TPoly {
        self.coords
            .iter()
            .fold(TPoly::one(), |acc, c| acc.lcm(c.den()))
    }
}

/// Witness forms certifying a reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `P dx = Σ p_β(f) ω_β + df ∧ dξ`.
    Second { xi: FormNm1 },
    /// `ω = Σ p_β(f) η_β + df ∧ ξ + dξ₁`.
    Prime { xi: FormNm1, xi1: FormNm1 },
    /// One variable, H'': `P dx = Σ p_β(f) ω_β + r(f) f' dx`.
    OneVarSecond { r: TPoly },
    /// One variable, H': `P = p_0(f) + Σ p_β(f) η_β`.
    OneVarPrime { constant: TPoly },
}

/// Coefficients `p_β` in the okbase order plus a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionResult {
    pub coeffs: Vec<TPoly>,
    pub witness: Witness,
}

fn add_scaled(acc: &mut [TPoly], v: &[TPoly], c: &Rational) {
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += &b.scale(c);
        }
    }
}

fn uni_coeffs(p: &MultiPoly) -> Vec<Rational> {
    let deg = p.terms().map(|(m, _)| m.exponents()[0] as usize).max();
    let mut v = vec![Rational::zero(); deg.map_or(0, |d| d + 1)];
    for (m, c) in p.terms() {
        v[m.exponents()[0] as usize] = c.clone();
    }
    v
}

impl TameContext {
    /// Validates tameness and builds the Milnor basis and exponents.
    pub fn new(f: MultiPoly, vars: WeightedVars) -> Result<Self> {
        if f.nvars() != vars.nvars() {
            return Err(Error::LengthMismatch {
                expected: vars.nvars(),
                found: f.nvars(),
            });
        }
        let alpha = vars.alpha().to_vec();
        let d = f
            .wdeg(&alpha)
            .ok_or_else(|| Error::ZeroInput("the polynomial is zero".into()))?;
        if d == 0 {
            return Err(Error::NotTame);
        }
        let g = f.homogeneous_part(&alpha, d);
        let gb_g = GroebnerBasis::jacobian(&g, &alpha);
        let basis = gb_g.okbase()?;
        if basis.is_empty() {
            return Err(Error::NotTame);
        }
        let gb_f = GroebnerBasis::jacobian(&f, &alpha);
        let total: u64 = alpha.iter().map(|&a| a as u64).sum();
        let a_beta = basis
            .degrees()
            .iter()
            .map(|&e| qq((e + total) as i64, d as i64))
            .collect();
        Ok(TameContext {
            f,
            g,
            vars,
            d,
            basis,
            a_beta,
            gb_g,
            gb_f,
            max_degree: DEFAULT_MAX_DEGREE,
            memo: RwLock::new(HashMap::new()),
            power_gaps: RwLock::new(Vec::new()),
        })
    }

    pub fn with_max_degree(mut self, cap: u64) -> Self {
        self.max_degree = cap;
        self
    }

    pub fn f(&self) -> &MultiPoly {
        &self.f
    }

    /// Top weighted-homogeneous part of `f`.
    pub fn g(&self) -> &MultiPoly {
        &self.g
    }

    pub fn vars(&self) -> &WeightedVars {
        &self.vars
    }

    pub fn alpha(&self) -> &[u32] {
        self.vars.alpha()
    }

    pub fn nvars(&self) -> usize {
        self.vars.nvars()
    }

    pub fn n(&self) -> usize {
        self.vars.n()
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn mu(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &QuotientBasis {
        &self.basis
    }

    pub fn a_beta(&self) -> &[Rational] {
        &self.a_beta
    }

    pub fn gb_f(&self) -> &GroebnerBasis {
        &self.gb_f
    }

    pub fn gb_g(&self) -> &GroebnerBasis {
        &self.gb_g
    }

    pub fn is_homogeneous(&self) -> bool {
        self.f == self.g
    }

    pub fn monomial(&self, i: usize) -> MultiPoly {
        MultiPoly::term(self.basis.monomials()[i].clone(), Rational::one())
    }

    /// `η_β = x^β η`.
    pub fn eta_beta(&self, i: usize) -> FormN {
        FormN::eta_beta(self.alpha(), self.d, &self.basis.monomials()[i])
    }

    fn total_alpha(&self) -> u64 {
        self.alpha().iter().map(|&a| a as u64).sum()
    }

    /// `c(g) − c(f)`.
    fn gap(&self, c: &TPoly) -> MultiPoly {
        let k = c.coeffs().len();
        if self.power_gaps.read().unwrap().len() < k {
            let mut gaps = self.power_gaps.write().unwrap();
            while gaps.len() < k {
                let j = gaps.len() as u32;
                gaps.push(&self.g.pow(j) - &self.f.pow(j));
            }
        }
        let gaps = self.power_gaps.read().unwrap();
        let mut out = MultiPoly::zero(self.nvars());
        for (a, d) in c.coeffs().iter().zip(gaps.iter()) {
            if !a.is_zero() {
                out += &d.scale(a);
            }
        }
        out
    }

    fn unit_alpha(&self) -> Vec<u32> {
        vec![1; self.nvars()]
    }

    /// Watchdog on the ordinary total degree of an input form.
    fn check_degree(&self, deg: Option<u64>) -> Result<()> {
        match deg {
            Some(e) if e > self.max_degree => Err(Error::DegreeLimit {
                degree: e,
                cap: self.max_degree,
            }),
            _ => Ok(()),
        }
    }

    fn require_n1(&self) -> Result<()> {
        if self.n() == 0 {
            Err(Error::OneVariable)
        } else {
            Ok(())
        }
    }

    /// Degree bound `wdeg(form)/d − A_β` on `deg p_β`.
    pub fn degree_bound(&self, form_degree: u64, i: usize) -> Rational {
        qq(form_degree as i64, self.d as i64) - &self.a_beta[i]
    }

    // ---- H'' with respect to g ----

    fn homog_monomial(&self, m: &Monomial) -> (Vec<TPoly>, FormNm1) {
        if let Some(hit) = self.memo.read().unwrap().get(m) {
            return hit.clone();
        }
        let mu = self.mu();
        let nv = self.nvars();
        let alpha = self.alpha();
        let mut coeffs = vec![TPoly::zero(); mu];
        let mut xi = FormNm1::zero(nv);
        if let Some(i) = self.basis.index_of(m) {
            coeffs[i] = TPoly::one();
        } else {
            let nf = self.gb_g.normal_form(&MultiPoly::term(m.clone(), Rational::one()));
            for (mono, c) in nf.remainder.terms() {
                let i = self.basis.index_of(mono).expect("standard monomial");
                coeffs[i] = TPoly::constant(c.clone());
            }
            let deg_m = m.wdeg(alpha) as i64;
            let total = self.total_alpha();
            let mut lower = MultiPoly::zero(nv);
            for (i, q) in nf.cofactors.iter().enumerate() {
                let target = deg_m - (self.d as i64 - alpha[i] as i64);
                if target < 0 {
                    continue;
                }
                for (gamma, c) in q.homogeneous_part(alpha, target as u64).terms() {
                    let denom = gamma.wdeg(alpha) + total - alpha[i] as u64;
                    let scale = c / qq(denom as i64, 1);
                    if let Some(low) = gamma.lower(i) {
                        let e = gamma.exponents()[i] as i64;
                        lower.add_term(low, &scale * qq(e * self.d as i64, 1));
                    }
                    let mut single = FormN::zero(nv);
                    *single.comp_mut(i) = MultiPoly::term(gamma.clone(), scale);
                    xi = xi.add(&euler_contraction(&single, alpha));
                }
            }
            if !lower.is_zero() {
                let (sc, sx) = self.homog_poly(&lower);
                for (a, b) in coeffs.iter_mut().zip(&sc) {
                    *a += &b.shift(1);
                }
                xi = xi.add(&sx.mul_poly(&self.g));
            }
        }
        self.memo
            .write()
            .unwrap()
            .insert(m.clone(), (coeffs.clone(), xi.clone()));
        (coeffs, xi)
    }

    fn homog_poly(&self, p: &MultiPoly) -> (Vec<TPoly>, FormNm1) {
        let mut coeffs = vec![TPoly::zero(); self.mu()];
        let mut xi = FormNm1::zero(self.nvars());
        for (m, c) in p.terms() {
            let (mc, mx) = self.homog_monomial(m);
            add_scaled(&mut coeffs, &mc, c);
            if !mx.is_zero() {
                xi = xi.add(&mx.scale(c));
            }
        }
        (coeffs, xi)
    }

    /// `P dx = Σ p_β(g) ω_β + dg ∧ dξ` with respect to the top homogeneous part `g`.
    pub fn reduce_top_homog(&self, p: &MultiPoly) -> Result<ReductionResult> {
        self.require_n1()?;
        self.check_degree(p.wdeg(&self.unit_alpha()))?;
        let (coeffs, xi) = self.homog_poly(p);
        Ok(ReductionResult {
            coeffs,
            witness: Witness::Second { xi },
        })
    }

    /// `ω = Σ p_β(g) η_β + dg ∧ ξ + dξ₁` with respect to `g`.
    pub fn reduce_n_homog(&self, w: &FormN) -> Result<ReductionResult> {
        self.require_n1()?;
        self.check_degree(w.wdeg(&self.unit_alpha()))?;
        Ok(self.homog_n(w))
    }

    fn homog_n(&self, w: &FormN) -> ReductionResult {
        let alpha = self.alpha();
        let (q, xi) = self.homog_poly(&dform_n(w));
        let coeffs: Vec<TPoly> = q
            .iter()
            .zip(&self.a_beta)
            .map(|(p, a)| {
                TPoly::from_coeffs(
                    p.coeffs()
                        .iter()
                        .enumerate()
                        .map(|(i, c)| c / (a + qq(i as i64, 1)))
                        .collect(),
                )
            })
            .collect();
        let mut theta = w.clone();
        for (i, p) in coeffs.iter().enumerate() {
            if !p.is_zero() {
                theta = theta.sub(&self.eta_beta(i).mul_poly(&p.eval_poly(&self.g)));
            }
        }
        let closed = theta.add(&wedge_df_nm1(&self.g, &xi));
        let xi1 = homotopy(&closed, alpha);
        ReductionResult {
            coeffs,
            witness: Witness::Prime {
                xi: xi.scale(&qq(-1, 1)),
                xi1,
            },
        }
    }

    // ---- general reductions ----

    /// `P dx = Σ p_β(f) ω_β + df ∧ dξ`; for one variable the relation is
    /// `P dx ≡ Σ p_β(f) ω_β` modulo `f'·Q[f] dx`.
    pub fn reduce_top(&self, p: &MultiPoly) -> Result<ReductionResult> {
        if self.n() == 0 {
            return self.n0_reduce_second(p);
        }
        self.check_degree(p.wdeg(&self.unit_alpha()))?;
        let diff = &self.g - &self.f;
        let mut coeffs = vec![TPoly::zero(); self.mu()];
        let mut xi = FormNm1::zero(self.nvars());
        let mut cur = p.clone();
        let mut last = None;
        while !cur.is_zero() {
            let deg = cur.wdeg(self.alpha());
            if last.is_some() && deg >= last {
                return Err(Error::Precondition("reduction degree failed to decrease".into()));
            }
            last = deg;
            let top = cur.homogeneous_part(self.alpha(), deg.unwrap_or(0));
            let (pc, px) = self.homog_poly(&top);
            let mut next = &cur - &top;
            next += &wedge_df_n(&diff, &dform(&px));
            for (i, c) in pc.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let delta = self.gap(c);
                next += &(&delta * &self.monomial(i));
                coeffs[i] += c;
            }
            xi = xi.add(&px);
            cur = next;
        }
        Ok(ReductionResult {
            coeffs,
            witness: Witness::Second { xi },
        })
    }

    /// `ω = Σ p_β(f) η_β + df ∧ ξ + dξ₁`; for one variable `ω` is a function and
    /// `ω = p_0(f) + Σ p_β(f) η_β`.
    pub fn reduce_n(&self, w: &FormN) -> Result<ReductionResult> {
        if self.n() == 0 {
            return self.n0_reduce_prime(w.comp(0));
        }
        self.check_degree(w.wdeg(&self.unit_alpha()))?;
        let diff = &self.g - &self.f;
        let nv = self.nvars();
        let mut coeffs = vec![TPoly::zero(); self.mu()];
        let mut xi = FormNm1::zero(nv);
        let mut xi1 = FormNm1::zero(nv);
        let mut cur = w.clone();
        let mut last = None;
        while !cur.is_zero() {
            let deg = cur.wdeg(self.alpha());
            if last.is_some() && deg >= last {
                return Err(Error::Precondition("reduction degree failed to decrease".into()));
            }
            last = deg;
            let top = cur.homogeneous_part(self.alpha(), deg.unwrap_or(0));
            let r = self.homog_n(&top);
            let Witness::Prime { xi: px, xi1: px1 } = r.witness else {
                unreachable!()
            };
            let mut next = cur.sub(&top).add(&wedge_df_nm1(&diff, &px));
            for (i, c) in r.coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let delta = self.gap(c);
                next = next.add(&self.eta_beta(i).mul_poly(&delta));
                coeffs[i] += c;
            }
            xi = xi.add(&px);
            xi1 = xi1.add(&px1);
            cur = next;
        }
        Ok(ReductionResult {
            coeffs,
            witness: Witness::Prime { xi, xi1 },
        })
    }

    // ---- one variable ----

    /// Writes `P = Σ_{i<D} q_i(f) x^i` by repeated division by `f`.
    fn n0_expand(&self, p: &MultiPoly) -> Vec<TPoly> {
        let fc = uni_coeffs(&self.f);
        let deg = fc.len() - 1;
        let lc_inv = fc[deg].recip();
        let mut rest = uni_coeffs(p);
        let mut out: Vec<Vec<Rational>> = vec![Vec::new(); deg];
        while rest.iter().any(|c| !c.is_zero()) {
            let mut quot = vec![Rational::zero(); rest.len().saturating_sub(deg)];
            for k in (deg..rest.len()).rev() {
                let q = &rest[k] * &lc_inv;
                if q.is_zero() {
                    continue;
                }
                for (j, c) in fc.iter().enumerate() {
                    let v = &q * c;
                    rest[k - deg + j] -= v;
                }
                quot[k - deg] = q;
            }
            for (i, o) in out.iter_mut().enumerate() {
                o.push(rest.get(i).cloned().unwrap_or_else(Rational::zero));
            }
            rest = quot;
        }
        out.into_iter().map(TPoly::from_coeffs).collect()
    }

    fn x_power_index(&self, k: usize) -> Option<usize> {
        self.basis
            .index_of(&Monomial::from_exponents(vec![k as u32]))
    }

    /// One variable, H'': rewrites `q_{D−1}(f) x^{D−1} dx` through `f'`.
    pub fn n0_reduce_second(&self, p: &MultiPoly) -> Result<ReductionResult> {
        if self.n() != 0 {
            return Err(Error::Precondition("one-variable reduction on several variables".into()));
        }
        self.check_degree(p.wdeg(&self.unit_alpha()))?;
        let q = self.n0_expand(p);
        let deg = q.len();
        let fc = uni_coeffs(&self.f);
        let top = qq(deg as i64, 1) * &fc[deg];
        let r = q[deg - 1].scale(&top.recip());
        let mut coeffs = vec![TPoly::zero(); self.mu()];
        for j in 0..deg - 1 {
            // [x^j] f_0' = (j+1) a_{j+1}
            let f0p = qq(j as i64 + 1, 1) * &fc[j + 1];
            let c = &q[j] - &r.scale(&f0p);
            coeffs[self.x_power_index(j).expect("basis monomial")] = c;
        }
        Ok(ReductionResult {
            coeffs,
            witness: Witness::OneVarSecond { r },
        })
    }

    /// One variable, H': `P = p_0(f) + Σ_{i≥1} p_i(f) x^i`, coordinates of `η_β = x^{β+1}/D`.
    pub fn n0_reduce_prime(&self, p: &MultiPoly) -> Result<ReductionResult> {
        if self.n() != 0 {
            return Err(Error::Precondition("one-variable reduction on several variables".into()));
        }
        self.check_degree(p.wdeg(&self.unit_alpha()))?;
        let q = self.n0_expand(p);
        let deg = q.len();
        let mut coeffs = vec![TPoly::zero(); self.mu()];
        for (i, qi) in q.iter().enumerate().skip(1) {
            coeffs[self.x_power_index(i - 1).expect("basis monomial")] =
                qi.scale(&qq(deg as i64, 1));
        }
        Ok(ReductionResult {
            coeffs,
            witness: Witness::OneVarPrime {
                constant: q[0].clone(),
            },
        })
    }

    // ---- re-expansion ----

    /// Re-expands a top-form reduction: `Σ p_β(h) x^β + dh ∧ dξ` (or the
    /// one-variable analogue), with `h = g` when `homogeneous`.
    pub fn expand_top(&self, r: &ReductionResult, homogeneous: bool) -> MultiPoly {
        let h = if homogeneous { &self.g } else { &self.f };
        let mut out = MultiPoly::zero(self.nvars());
        for (i, c) in r.coeffs.iter().enumerate() {
            out += &(&c.eval_poly(h) * &self.monomial(i));
        }
        match &r.witness {
            Witness::Second { xi } => out += &wedge_df_n(h, &dform(xi)),
            Witness::OneVarSecond { r } => out += &(&r.eval_poly(h) * &h.derivative(0)),
            _ => panic!("not a top-form reduction"),
        }
        out
    }

    /// Re-expands an `n`-form reduction: `Σ p_β(h) η_β + dh ∧ ξ + dξ₁`.
    pub fn expand_n(&self, r: &ReductionResult, homogeneous: bool) -> FormN {
        let h = if homogeneous { &self.g } else { &self.f };
        let mut out = FormN::zero(self.nvars());
        for (i, c) in r.coeffs.iter().enumerate() {
            out = out.add(&self.eta_beta(i).mul_poly(&c.eval_poly(h)));
        }
        match &r.witness {
            Witness::Prime { xi, xi1 } => out.add(&wedge_df_nm1(h, xi)).add(&forms::dform(xi1)),
            Witness::OneVarPrime { constant } => {
                let mut c = out.comp(0).clone();
                c += &constant.eval_poly(h);
                FormN::from_comps(vec![c])
            }
            _ => panic!("not an n-form reduction"),
        }
    }
}
