//! The numbers `d_β`, the index sets `I^k_m` and the basis of H'' compatible
//! with the mixed Hodge structure.

use num_traits::Signed;

use crate::algebra::matrix::{det, rank, Field};
use crate::algebra::{fmt_rational, is_negative_constant, qq, render_coefficient, rational_content, Monomial, TFrac, TPoly};
use crate::brieskorn::{Module, ModuleClass, TameContext};
use crate::error::{Error, Result};
use crate::gauss_manin::{multiplication_matrix, GaussManin};

/// Entry `c(t)·x0^K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct X0Entry {
    pub coeff: TPoly,
    pub exponent: i64,
}

/// Homogenized multiplication matrix with entries `c(t)·x0^{K_{β,β′}}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct X0Matrix {
    pub entries: Vec<Vec<X0Entry>>,
}

/// `K_{β,β′} = d − 1 + deg x^β − deg x^β′`.
pub fn k_exponent(ctx: &TameContext, b: usize, b2: usize) -> i64 {
    let deg = ctx.basis().degrees();
    ctx.d() as i64 - 1 + deg[b] as i64 - deg[b2] as i64
}

impl X0Matrix {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Checks that every nonzero entry carries the exponent `K_{β,β′} ≥ 0`.
    pub fn has_k_pattern(&self, ctx: &TameContext) -> bool {
        self.entries.iter().enumerate().all(|(b, row)| {
            row.iter().enumerate().all(|(b2, e)| {
                e.coeff.is_zero() || (e.exponent == k_exponent(ctx, b, b2) && e.exponent >= 0)
            })
        })
    }

    /// Transcript-style rendering, one row per line.
    pub fn render(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(render_x0_entry).collect())
            .collect();
        render_grid(&cells)
    }
}

fn render_x0_entry(e: &X0Entry) -> String {
    if e.coeff.is_zero() {
        return "0".into();
    }
    let x0 = match e.exponent {
        0 => String::new(),
        1 => "x0".into(),
        k => format!("x0^{k}"),
    };
    if x0.is_empty() {
        return render_coefficient(&e.coeff);
    }
    if e.coeff.is_one() {
        return x0;
    }
    format!("{}*{}", render_coefficient(&e.coeff), x0)
}

/// Aligns cells into comma-separated columns; every cell but the last ends in a comma.
pub fn render_grid(cells: &[Vec<String>]) -> String {
    let cols = cells.first().map_or(0, Vec::len);
    let widths: Vec<usize> = (0..cols)
        .map(|j| cells.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for (i, row) in cells.iter().enumerate() {
        let mut line = String::new();
        for (j, c) in row.iter().enumerate() {
            let cell = if i + 1 < cells.len() || j + 1 < cols {
                format!("{c},")
            } else {
                c.clone()
            };
            line.push_str(&format!("{cell:<w$}", w = widths[j] + 1));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// `A_F = d·[x0^K c]`, or with `shifted` the matrix `A_F − t·d·x0^{d−1}·I`.
pub fn muldf(ctx: &TameContext, shifted: bool) -> X0Matrix {
    let c = multiplication_matrix(ctx);
    let d = qq(ctx.d() as i64, 1);
    let mu = ctx.mu();
    let entries = (0..mu)
        .map(|b| {
            (0..mu)
                .map(|b2| {
                    let mut coeff = TPoly::constant(&c[b][b2] * &d);
                    if shifted && b == b2 {
                        coeff -= &TPoly::monomial(d.clone(), 1);
                    }
                    X0Entry {
                        coeff,
                        exponent: k_exponent(ctx, b, b2),
                    }
                })
                .collect()
        })
        .collect();
    X0Matrix { entries }
}

/// Replaces row `b2` by `row_b2 − (A_{b2,b3}/A_{b1,b3})·row_b1` over Q(t),
/// returning the squarefree monic numerator of the pivot.
pub fn ge_step(
    ctx: &TameContext,
    m: &mut [Vec<TFrac>],
    b1: usize,
    b2: usize,
    b3: usize,
) -> Result<TPoly> {
    if ctx.a_beta()[b1] > ctx.a_beta()[b2] {
        return Err(Error::Precondition(format!(
            "elimination needs A of row {} not larger than A of row {}",
            b1 + 1,
            b2 + 1
        )));
    }
    let piv = m[b1][b3].clone();
    if piv.is_zero() {
        return Err(Error::ZeroPivot { row: b1 + 1, col: b3 + 1 });
    }
    let u = m[b2][b3].over(&piv);
    if !u.is_zero() {
        for k in 0..m[b1].len() {
            let v = m[b1][k].times(&u);
            m[b2][k] = m[b2][k].minus(&v);
        }
    }
    Ok(piv.num().squarefree())
}

/// Whether `t` is transcendental or the elimination follows the diagonal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DBetaMode {
    /// `t` is a generic value: pivots are the first nonzero column of each row.
    Generic,
    /// Pivots stay on the diagonal, so every `d_β = d − 1`.
    Tracked,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DBetaResult {
    pub dbeta: Vec<i64>,
    /// Monic `E(t)` whose roots form the exceptional set.
    pub exceptional: TPoly,
    pub mode: DBetaMode,
}

/// The normalized matrix `[c] − t·I` over Q(t) (exponents of `x0` implicit).
pub fn normalized_matrix(ctx: &TameContext) -> Vec<Vec<TFrac>> {
    let c = multiplication_matrix(ctx);
    c.iter()
        .enumerate()
        .map(|(b, row)| {
            row.iter()
                .enumerate()
                .map(|(b2, x)| {
                    let mut p = TPoly::constant(x.clone());
                    if b == b2 {
                        p -= &TPoly::t();
                    }
                    TFrac::from_poly(p)
                })
                .collect()
        })
        .collect()
}

/// The elimination producing `d_β` and the exceptional polynomial.
pub fn dbeta(ctx: &TameContext, mode: DBetaMode) -> Result<DBetaResult> {
    let mu = ctx.mu();
    let mut m = normalized_matrix(ctx);
    let mut d = vec![-1i64; mu];
    let mut e = TPoly::one();
    for b in (0..mu).rev() {
        let col = match mode {
            DBetaMode::Generic => (0..mu)
                .find(|&j| !m[b][j].is_zero())
                .ok_or(Error::ZeroPivot { row: b + 1, col: 0 })?,
            DBetaMode::Tracked => b,
        };
        if m[b][col].is_zero() {
            return Err(Error::ZeroPivot { row: b + 1, col: col + 1 });
        }
        d[col] = k_exponent(ctx, b, col);
        e = e.lcm(&m[b][col].num().squarefree());
        for above in (0..b).rev() {
            ge_step(ctx, &mut m, b, above, col)?;
        }
    }
    if d.iter().any(|&x| x < 0) {
        return Err(Error::SingularBasis);
    }
    Ok(DBetaResult {
        dbeta: d,
        exceptional: e.monic(),
        mode,
    })
}

/// Index sets `I^k_n` (`k = n..0`) and `I^k_{n+1}` (`k = n..1`), members
/// listed by descending okbase index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeIndexSets {
    pub mid: Vec<Vec<usize>>,
    pub top: Vec<Vec<usize>>,
}

pub fn imk(ctx: &TameContext, db: &DBetaResult) -> HodgeIndexSets {
    let n = ctx.n() as i64;
    let d = qq(ctx.d() as i64, 1);
    let mu = ctx.mu();
    let a = ctx.a_beta();
    let mid = (0..=n)
        .rev()
        .map(|k| {
            let v = qq(n + 1 - k, 1);
            (0..mu)
                .rev()
                .filter(|&b| {
                    let lo = &a[b] + d.recip();
                    let hi = &a[b] + qq(db.dbeta[b], 1) / &d;
                    lo <= v && v <= hi
                })
                .collect()
        })
        .collect();
    let top = (1..=n)
        .rev()
        .map(|k| {
            let v = qq(n + 1 - k, 1);
            (0..mu).rev().filter(|&b| a[b] == v).collect()
        })
        .collect();
    HodgeIndexSets { mid, top }
}

impl HodgeIndexSets {
    pub fn render(&self, ctx: &TameContext) -> Vec<Vec<Vec<String>>> {
        let names = ctx.vars().names();
        let r = |sets: &[Vec<usize>]| -> Vec<Vec<String>> {
            sets.iter()
                .map(|s| s.iter().map(|&b| ctx.basis().monomials()[b].render(names)).collect())
                .collect()
        };
        vec![r(&self.mid), r(&self.top)]
    }

    pub fn total(&self) -> usize {
        self.mid.iter().chain(&self.top).map(Vec::len).sum()
    }
}

/// Row `(weight m, Hodge level k, β, iterate n−k)` with its coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MHSRow {
    pub weight: usize,
    pub level: usize,
    pub beta: usize,
    pub iterate: usize,
    pub coords: Vec<TFrac>,
    pub scalar: TFrac,
    pub primitive: Vec<TPoly>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MHSBasis {
    pub rows: Vec<MHSRow>,
    /// Determinant of the primitive row matrix.
    pub det: TPoly,
}

/// Splits a row into `scalar × primitive`, the primitive part having integer
/// coefficients with content one. The sign is flipped when the last nonzero
/// entry is a negative constant.
pub fn present_row(row: &[TFrac]) -> (TFrac, Vec<TPoly>) {
    let l = row.iter().fold(TPoly::one(), |acc, x| acc.lcm(x.den()));
    let cleared: Vec<TPoly> = row
        .iter()
        .map(|x| x.num() * &l.exact_div(x.den()))
        .collect();
    let g = cleared
        .iter()
        .fold(TPoly::zero(), |acc, p| if acc.is_zero() { p.monic() } else { acc.gcd(p) });
    if g.is_zero() {
        return (TFrac::zero(), cleared);
    }
    let mut prim: Vec<TPoly> = cleared.iter().map(|p| p.exact_div(&g)).collect();
    let cont = rational_content(prim.iter().flat_map(|p| p.coeffs().iter()));
    let mut c = cont.clone();
    prim = prim.iter().map(|p| p.scale(&cont.recip())).collect();
    if let Some(last) = prim.iter().rev().find(|p| !p.is_zero()) {
        if is_negative_constant(last) {
            prim = prim.iter().map(|p| -p).collect();
            c = -c;
        }
    }
    let scalar = TFrac::new(g.scale(&c), l);
    (scalar, prim)
}

/// The basis `∇^{n−k} ω_β` for `β ∈ I^k_m`, rows ordered mid sets then top sets.
pub fn changebase(gm: &GaussManin<'_>, db: &DBetaResult) -> Result<MHSBasis> {
    let ctx = gm.ctx();
    let n = ctx.n();
    let mu = ctx.mu();
    let sets = imk(ctx, db);
    let mut rows = Vec::with_capacity(mu);
    let mut push = |weight: usize, level: usize, beta: usize| -> Result<()> {
        let iterate = n - level;
        let unit = ModuleClass::unit(Module::Second, mu, beta);
        let coords = if iterate == 0 {
            unit.coords
        } else {
            gm.nabla_iter(&unit, iterate)?.coords
        };
        let (scalar, primitive) = present_row(&coords);
        rows.push(MHSRow {
            weight,
            level,
            beta,
            iterate,
            coords,
            scalar,
            primitive,
        });
        Ok(())
    };
    for (i, set) in sets.mid.iter().enumerate() {
        for &b in set {
            push(n, n - i, b)?;
        }
    }
    for (i, set) in sets.top.iter().enumerate() {
        for &b in set {
            push(n + 1, n - i, b)?;
        }
    }
    if rows.len() != mu {
        return Err(Error::SingularBasis);
    }
    let prim: Vec<Vec<TFrac>> = rows
        .iter()
        .map(|r| r.primitive.iter().cloned().map(TFrac::from_poly).collect())
        .collect();
    let dt = det(&prim);
    if dt.is_zero() {
        return Err(Error::SingularBasis);
    }
    Ok(MHSBasis {
        rows,
        det: dt.num().clone(),
    })
}

impl MHSBasis {
    pub fn scalars(&self) -> Vec<String> {
        self.rows.iter().map(|r| r.scalar.render()).collect()
    }

    pub fn primitive_matrix(&self) -> Vec<Vec<TPoly>> {
        self.rows.iter().map(|r| r.primitive.clone()).collect()
    }

    /// Full coordinate matrix over Q(t).
    pub fn coordinate_matrix(&self) -> Vec<Vec<TFrac>> {
        self.rows.iter().map(|r| r.coords.clone()).collect()
    }

    pub fn render_matrix(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.primitive.iter().map(render_coefficient).collect())
            .collect();
        render_grid(&cells)
    }

    /// Indices of rows in `F^i`, i.e. with Hodge level at least `i`.
    pub fn hodge_block(&self, i: usize) -> Vec<usize> {
        (0..self.rows.len()).filter(|&r| self.rows[r].level >= i).collect()
    }

    /// Indices of rows of weight `m`.
    pub fn weight_block(&self, m: usize) -> Vec<usize> {
        (0..self.rows.len()).filter(|&r| self.rows[r].weight == m).collect()
    }
}

/// `S·∇` of each `F^i` row written in the basis; returns whether every
/// component outside `F^{i−1}` vanishes for all `i ≥ 1`.
pub fn griffiths_transversality(gm: &GaussManin<'_>, basis: &MHSBasis) -> Result<bool> {
    let m = basis.coordinate_matrix();
    let inv = invert(&m)?;
    let n = gm.ctx().n();
    for i in 1..=n {
        let allowed = basis.hodge_block(i - 1);
        for r in basis.hodge_block(i) {
            let class = ModuleClass {
                module: Module::Second,
                coords: basis.rows[r].coords.clone(),
            };
            let nab = gm.nabla(&class)?;
            let in_basis = crate::algebra::matrix::vec_mul(&nab.coords, &inv);
            for (j, c) in in_basis.iter().enumerate() {
                if !allowed.contains(&j) && !c.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Smallest `k ≤ μ` with `∇^k ω_β` in the span of the weight-`n` rows, if any.
pub fn residue_killer(gm: &GaussManin<'_>, basis: &MHSBasis, beta: usize) -> Result<Option<usize>> {
    let ctx = gm.ctx();
    let mu = ctx.mu();
    let n = ctx.n();
    let wn: Vec<Vec<TFrac>> = basis
        .weight_block(n)
        .into_iter()
        .map(|r| basis.rows[r].coords.clone())
        .collect();
    let base_rank = rank(&wn);
    let unit = ModuleClass::unit(Module::Second, mu, beta);
    for k in 1..=mu {
        let v = gm.nabla_iter(&unit, k)?.coords;
        let mut with = wn.clone();
        with.push(v);
        if rank(&with) == base_rank {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

fn invert(m: &[Vec<TFrac>]) -> Result<Vec<Vec<TFrac>>> {
    let n = m.len();
    let aug: Vec<Vec<TFrac>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { TFrac::one() } else { TFrac::zero() }));
            row
        })
        .collect();
    let (red, piv) = crate::algebra::matrix::rref(&aug);
    if piv.len() < n || piv[n - 1] >= n {
        return Err(Error::SingularBasis);
    }
    Ok(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Renders a `d_β` vector as `0,2,2,4`.
pub fn render_dbeta(db: &DBetaResult) -> String {
    db.dbeta.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

/// Renders `A_β` values.
pub fn render_abeta(ctx: &TameContext) -> Vec<String> {
    ctx.a_beta().iter().map(fmt_rational).collect()
}

/// Monomials of a context basis by index, for labels.
pub fn basis_monomial(ctx: &TameContext, b: usize) -> &Monomial {
    &ctx.basis().monomials()[b]
}

/// Whether `p` has all roots among those of `q` (both nonzero).
pub fn roots_contained(p: &TPoly, q: &TPoly) -> bool {
    let ps = p.squarefree();
    ps.is_constant() || ps.divides(&q.squarefree())
}

/// `Σ d_β = μ(d−1)` and `d_β < d(n+2−A_β)`.
pub fn dbeta_bounds_hold(ctx: &TameContext, db: &DBetaResult) -> bool {
    let mu = ctx.mu() as i64;
    let d = ctx.d() as i64;
    let sum: i64 = db.dbeta.iter().sum();
    let n = ctx.n() as i64;
    sum == mu * (d - 1)
        && db
            .dbeta
            .iter()
            .zip(ctx.a_beta())
            .all(|(&x, a)| qq(x, 1) < qq(d, 1) * (qq(n + 2, 1) - a))
}

/// `0 < A_β < n+1`.
pub fn abeta_bounds_hold(ctx: &TameContext) -> bool {
    let n = qq(ctx.n() as i64 + 1, 1);
    ctx.a_beta().iter().all(|a| a.is_positive() && a < &n)
}
