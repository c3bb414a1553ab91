//! The Gauss-Manin connection on H'' and H' for a chosen `S(t)` with
//! `S(f) ∈ jacob(f)`.


use std::sync::OnceLock;

use crate::algebra::forms::{dform_n, wedge_df_n};
use crate::algebra::matrix::charpoly;
use crate::algebra::{qq, rational_content, FormN, MultiPoly, Rational, TFrac, TPoly};
use crate::brieskorn::{Module, ModuleClass, TameContext};
use crate::error::{Error, Result};

/// Matrix of multiplication by `f` on the Milnor algebra, rows in okbase order.
pub fn multiplication_matrix(ctx: &TameContext) -> Vec<Vec<Rational>> {
    ctx.gb_f().mult_matrix(ctx.f(), ctx.basis())
}

/// `det(t·I − A_f)`.
pub fn char_s(ctx: &TameContext) -> TPoly {
    charpoly(&multiplication_matrix(ctx))
}

/// Monic squarefree part of [`char_s`].
pub fn squarefree_s(ctx: &TameContext) -> TPoly {
    char_s(ctx).squarefree()
}

/// Cofactors `p_i` with `S(f) = Σ p_i ∂f/∂x_i`, as the `n`-form `η_f`.
pub fn eta_f(ctx: &TameContext, s: &TPoly) -> Result<FormN> {
    if s.is_zero() {
        return Err(Error::ValidationFailed("S is zero".into()));
    }
    let sf = s.eval_poly(ctx.f());
    let nf = ctx.gb_f().normal_form(&sf);
    if !nf.remainder.is_zero() {
        return Err(Error::ValidationFailed(format!(
            "S(f) is not in the Jacobian ideal for S = {}",
            s.render()
        )));
    }
    Ok(FormN::from_comps(nf.cofactors))
}

/// `S·∇` on H'' as a scalar `1/(c·S)` times an integer body with content one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionMatrix {
    pub scale: TFrac,
    pub body: Vec<Vec<TPoly>>,
}

impl ConnectionMatrix {
    /// Rows `∇ω_β` as rational-function vectors.
    pub fn rows(&self) -> Vec<Vec<TFrac>> {
        self.body
            .iter()
            .map(|r| r.iter().map(|p| &TFrac::from_poly(p.clone()) * &self.scale).collect())
            .collect()
    }
}

/// Gauss-Manin data for a context and a validated `S`.
#[derive(Debug)]
pub struct GaussManin<'a> {
    ctx: &'a TameContext,
    s: TPoly,
    s_prime: TPoly,
    eta_f: FormN,
    body: Vec<Vec<TPoly>>,
    /// H′ tables, built on first use.
    prime_body: OnceLock<Result<Vec<Vec<TPoly>>>>,
    df_eta: OnceLock<Result<Vec<Vec<TPoly>>>>,
}

impl<'a> GaussManin<'a> {
    /// Uses the characteristic polynomial of multiplication by `f`.
    pub fn new(ctx: &'a TameContext) -> Result<Self> {
        Self::with_s(ctx, char_s(ctx))
    }

    /// Uses a user supplied `S`, which is made monic and validated.
    pub fn with_s(ctx: &'a TameContext, s: TPoly) -> Result<Self> {
        let eta = eta_f(ctx, &s)?;
        let s = s.monic();
        let eta = eta.scale(&s.lc().recip());
        let s_prime = s.derivative();
        let sp_f = s_prime.eval_poly(ctx.f());
        let mu = ctx.mu();
        let mut body = Vec::with_capacity(mu);
        for i in 0..mu {
            let xb = ctx.monomial(i);
            let q = &dform_n(&eta.mul_poly(&xb)) - &(&sp_f * &xb);
            body.push(ctx.reduce_top(&q)?.coeffs);
        }
        Ok(GaussManin {
            ctx,
            s,
            s_prime,
            eta_f: eta,
            body,
            prime_body: OnceLock::new(),
            df_eta: OnceLock::new(),
        })
    }

    pub fn ctx(&self) -> &TameContext {
        self.ctx
    }

    pub fn s(&self) -> &TPoly {
        &self.s
    }

    pub fn eta_f(&self) -> &FormN {
        &self.eta_f
    }

    /// Rows `S·∇ω_β` in the `ω` basis.
    pub fn body(&self) -> &[Vec<TPoly>] {
        &self.body
    }

    /// Rows `S·∇η_β` in the `η` basis.
    pub fn prime_body(&self) -> Result<&[Vec<TPoly>]> {
        let rows = self.prime_body.get_or_init(|| {
            (0..self.ctx.mu())
                .map(|i| {
                    let w = self.eta_f.mul_poly(&self.ctx.monomial(i));
                    let a = &self.ctx.a_beta()[i];
                    Ok(self.ctx.reduce_n(&w)?.coeffs.iter().map(|p| p.scale(a)).collect())
                })
                .collect()
        });
        rows.as_deref().map_err(Clone::clone)
    }

    /// Rows `[df ∧ x^β η]` in the `ω` basis.
    fn df_eta(&self) -> Result<&[Vec<TPoly>]> {
        let rows = self.df_eta.get_or_init(|| {
            let euler = FormN::eta(self.ctx.alpha(), self.ctx.d());
            (0..self.ctx.mu())
                .map(|i| {
                    let w = euler.mul_poly(&self.ctx.monomial(i));
                    Ok(self.ctx.reduce_top(&wedge_df_n(self.ctx.f(), &w))?.coeffs)
                })
                .collect()
        });
        rows.as_deref().map_err(Clone::clone)
    }

    fn check(&self, c: &ModuleClass, m: Module) -> Result<()> {
        if c.module != m {
            return Err(Error::Precondition("class lives in the other Brieskorn module".into()));
        }
        if c.coords.len() != self.ctx.mu() {
            return Err(Error::LengthMismatch {
                expected: self.ctx.mu(),
                found: c.coords.len(),
            });
        }
        Ok(())
    }

    fn apply(&self, coords: &[TFrac], rows: &[Vec<TPoly>]) -> Vec<TFrac> {
        let mu = self.ctx.mu();
        let s = TFrac::from_poly(self.s.clone());
        let mut out: Vec<TFrac> = coords.iter().map(TFrac::derivative).collect();
        let mut acc = vec![TFrac::zero(); mu];
        for (c, row) in coords.iter().zip(rows) {
            if c.is_zero() {
                continue;
            }
            for (a, p) in acc.iter_mut().zip(row) {
                if !p.is_zero() {
                    *a = &*a + &(c * &TFrac::from_poly(p.clone()));
                }
            }
        }
        for (o, a) in out.iter_mut().zip(&acc) {
            *o = &*o + &(a / &s);
        }
        out
    }

    /// `∇` on H''.
    pub fn nabla(&self, c: &ModuleClass) -> Result<ModuleClass> {
        self.check(c, Module::Second)?;
        Ok(ModuleClass {
            module: Module::Second,
            coords: self.apply(&c.coords, &self.body),
        })
    }

    /// `∇^k` on H''. Polynomial classes go through the tower
    /// `∇_{k−1}∘…∘∇_0 / S^k`; others through repeated application.
    pub fn nabla_iter(&self, c: &ModuleClass, k: usize) -> Result<ModuleClass> {
        self.check(c, Module::Second)?;
        if !c.coords.iter().all(TFrac::is_poly) {
            let mut cur = c.clone();
            for _ in 0..k {
                cur = self.nabla(&cur)?;
            }
            return Ok(cur);
        }
        let a: Vec<TPoly> = c.coords.iter().map(|x| x.num().clone()).collect();
        let tower = self.tower(&a, k);
        let den = TFrac::from_poly(self.s.pow(k as u32));
        Ok(ModuleClass {
            module: Module::Second,
            coords: tower[k].iter().map(|p| &TFrac::from_poly(p.clone()) / &den).collect(),
        })
    }

    /// Numerators `a_j` with `∇^j[a_0] = a_j / S^j` for `j = 0..=k`.
    pub fn tower(&self, a0: &[TPoly], k: usize) -> Vec<Vec<TPoly>> {
        let mu = self.ctx.mu();
        let mut out = vec![a0.to_vec()];
        for j in 0..k {
            let a = out.last().unwrap();
            let mut next: Vec<TPoly> = a.iter().map(|p| &self.s * &p.derivative()).collect();
            let js = self.s_prime.scale(&qq(j as i64, 1));
            for (b, ab) in a.iter().enumerate() {
                if ab.is_zero() {
                    continue;
                }
                for (i, p) in self.body[b].iter().enumerate() {
                    if !p.is_zero() {
                        next[i] += &(ab * p);
                    }
                }
                next[b] -= &(ab * &js);
            }
            debug_assert_eq!(next.len(), mu);
            out.push(next);
        }
        out
    }

    /// The matrix `(1/(c·S))·[p_{β,β′}]` with integer body of content one,
    /// after cancelling the common polynomial factor of the body and `S`.
    pub fn nablamat(&self) -> ConnectionMatrix {
        let common = self.body.iter().flatten().fold(self.s.clone(), |acc, p| acc.gcd(p));
        let body: Vec<Vec<TPoly>> = self
            .body
            .iter()
            .map(|r| r.iter().map(|p| p.exact_div(&common)).collect())
            .collect();
        let s = self.s.exact_div(&common);
        let cont = rational_content(body.iter().flatten().flat_map(|p| p.coeffs().iter()));
        let inv = cont.recip();
        let body = body
            .iter()
            .map(|r| r.iter().map(|p| p.scale(&inv)).collect())
            .collect();
        let scale = TFrac::new(TPoly::one(), s.scale(&inv));
        ConnectionMatrix { scale, body }
    }

    /// `∇` on H'.
    pub fn nabla_prime(&self, c: &ModuleClass) -> Result<ModuleClass> {
        self.check(c, Module::Prime)?;
        Ok(ModuleClass {
            module: Module::Prime,
            coords: self.apply(&c.coords, self.prime_body()?),
        })
    }

    /// The differential `d: H' → H''`.
    pub fn d_map(&self, c: &ModuleClass) -> Result<ModuleClass> {
        self.check(c, Module::Prime)?;
        let mu = self.ctx.mu();
        let df_eta = self.df_eta()?;
        let mut out = vec![TFrac::zero(); mu];
        for (b, r) in c.coords.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            let rp = r.derivative();
            if !rp.is_zero() {
                for (o, p) in out.iter_mut().zip(&df_eta[b]) {
                    if !p.is_zero() {
                        *o = &*o + &(&rp * &TFrac::from_poly(p.clone()));
                    }
                }
            }
            out[b] = &out[b] + &r.scale(&self.ctx.a_beta()[b]);
        }
        Ok(ModuleClass {
            module: Module::Second,
            coords: out,
        })
    }

    /// Coordinates of `[P dx]` in H''.
    pub fn class_of_top(&self, p: &MultiPoly) -> Result<ModuleClass> {
        Ok(ModuleClass::from_polys(Module::Second, &self.ctx.reduce_top(p)?.coeffs))
    }

    /// Coordinates of `[ω]` in H'.
    pub fn class_of_n(&self, w: &FormN) -> Result<ModuleClass> {
        Ok(ModuleClass::from_polys(Module::Prime, &self.ctx.reduce_n(w)?.coeffs))
    }
}

/// `deg S − 1 + A_β − A_β′`, the bound on entry degrees of `S·∇`.
pub fn entry_degree_bound(ctx: &TameContext, s: &TPoly, b: usize, b2: usize) -> Rational {
    let ds = s.degree().unwrap_or(0) as i64;
    qq(ds - 1, 1) + &ctx.a_beta()[b] - &ctx.a_beta()[b2]
}
