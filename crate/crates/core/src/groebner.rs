//! Buchberger bases over Q with cofactor tracking, normal forms and
//! monomial bases of finite-dimensional quotients.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::algebra::{Monomial, MonomialOrder, MultiPoly, OrderKey, Rational, RevLex, WeightedVars};
use crate::error::{Error, Result};

/// Reduced Gröbner basis together with each element written in terms of the
/// original generators.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    nvars: usize,
    generators: Vec<MultiPoly>,
    basis: Vec<MultiPoly>,
    leads: Vec<Monomial>,
    cofactors: Vec<Vec<MultiPoly>>,
}

/// Result of dividing by a Gröbner basis.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalForm {
    pub remainder: MultiPoly,
    /// Cofactors with respect to the original generators.
    pub cofactors: Vec<MultiPoly>,
}

#[derive(Clone)]
struct Tracked {
    poly: MultiPoly,
    cof: Vec<MultiPoly>,
}

fn lead(p: &MultiPoly, ord: &MonomialOrder) -> Option<(Monomial, Rational)> {
    p.terms()
        .max_by(|a, b| ord.cmp(a.0, b.0))
        .map(|(m, c)| (m.clone(), c.clone()))
}

fn to_keyed(p: &MultiPoly, ord: &MonomialOrder) -> BTreeMap<OrderKey, Rational> {
    p.terms().map(|(m, c)| (ord.key(m), c.clone())).collect()
}

fn sub_scaled(
    work: &mut BTreeMap<OrderKey, Rational>,
    g: &MultiPoly,
    m: &Monomial,
    c: &Rational,
    ord: &MonomialOrder,
) {
    for (gm, gc) in g.terms() {
        let key = ord.key(&gm.mul(m));
        let v = gc * c;
        match work.get_mut(&key) {
            Some(x) => {
                *x -= v;
                if x.is_zero() {
                    work.remove(&key);
                }
            }
            None => {
                work.insert(key, -v);
            }
        }
    }
}

impl GroebnerBasis {
    /// Buchberger's algorithm with the normal selection strategy and the
    /// coprime-leading-term criterion, followed by full interreduction.
    pub fn new(generators: Vec<MultiPoly>, order: MonomialOrder) -> Self {
        let nvars = generators.first().map(|g| g.nvars()).unwrap_or(0);
        let r = generators.len();
        let mut work: Vec<Tracked> = Vec::new();
        for (j, g) in generators.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let mut cof = vec![MultiPoly::zero(nvars); r];
            cof[j] = MultiPoly::one(nvars);
            let t = Tracked {
                poly: g.clone(),
                cof,
            };
            let t = Self::tracked_reduce(&t, &work, &order);
            if !t.poly.is_zero() {
                work.push(Self::monic(t, &order));
            }
        }
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for j in 0..work.len() {
            for i in 0..j {
                pairs.push((i, j));
            }
        }
        while !pairs.is_empty() {
            let pos = (0..pairs.len())
                .min_by(|&a, &b| {
                    let la = Self::pair_lcm(&work, pairs[a], &order);
                    let lb = Self::pair_lcm(&work, pairs[b], &order);
                    order.cmp(&la, &lb)
                })
                .unwrap();
            let (i, j) = pairs.swap_remove(pos);
            let li = lead(&work[i].poly, &order).unwrap().0;
            let lj = lead(&work[j].poly, &order).unwrap().0;
            if li.is_coprime(&lj) {
                continue;
            }
            let s = Self::spoly(&work[i], &work[j], &order);
            let s = Self::tracked_reduce(&s, &work, &order);
            if s.poly.is_zero() {
                continue;
            }
            work.push(Self::monic(s, &order));
            let k = work.len() - 1;
            for i in 0..k {
                pairs.push((i, k));
            }
        }
        // minimize
        let leads: Vec<Monomial> = work.iter().map(|t| lead(&t.poly, &order).unwrap().0).collect();
        let mut keep: Vec<usize> = Vec::new();
        for i in 0..work.len() {
            let redundant = (0..work.len()).any(|j| {
                j != i && leads[j].divides(&leads[i]) && (leads[j] != leads[i] || j < i)
            });
            if !redundant {
                keep.push(i);
            }
        }
        let mut minimal: Vec<Tracked> = keep.into_iter().map(|i| work[i].clone()).collect();
        minimal.sort_by(|a, b| {
            order.cmp(&lead(&a.poly, &order).unwrap().0, &lead(&b.poly, &order).unwrap().0)
        });
        // interreduce tails
        for i in 0..minimal.len() {
            let others: Vec<Tracked> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, t)| t.clone())
                .collect();
            minimal[i] = Self::tracked_tail_reduce(&minimal[i], &others, &order);
        }
        let leads = minimal.iter().map(|t| lead(&t.poly, &order).unwrap().0).collect();
        GroebnerBasis {
            order,
            nvars,
            generators,
            leads,
            basis: minimal.iter().map(|t| t.poly.clone()).collect(),
            cofactors: minimal.into_iter().map(|t| t.cof).collect(),
        }
    }

    /// Basis of the ideal generated by the partial derivatives of `f`.
    pub fn jacobian(f: &MultiPoly, alpha: &[u32]) -> Self {
        Self::new(f.jacobian(), MonomialOrder::new(alpha.to_vec()))
    }

    fn pair_lcm(work: &[Tracked], (i, j): (usize, usize), ord: &MonomialOrder) -> Monomial {
        let a = lead(&work[i].poly, ord).unwrap().0;
        let b = lead(&work[j].poly, ord).unwrap().0;
        a.lcm(&b)
    }

    fn monic(t: Tracked, ord: &MonomialOrder) -> Tracked {
        let lc = lead(&t.poly, ord).unwrap().1.recip();
        Tracked {
            poly: t.poly.scale(&lc),
            cof: t.cof.iter().map(|c| c.scale(&lc)).collect(),
        }
    }

    fn spoly(a: &Tracked, b: &Tracked, ord: &MonomialOrder) -> Tracked {
        let (la, ca) = lead(&a.poly, ord).unwrap();
        let (lb, cb) = lead(&b.poly, ord).unwrap();
        let l = la.lcm(&lb);
        let ma = la.quotient_of(&l).unwrap();
        let mb = lb.quotient_of(&l).unwrap();
        let ka = ca.recip();
        let kb = -cb.recip();
        Tracked {
            poly: &a.poly.mul_term(&ma, &ka) + &b.poly.mul_term(&mb, &kb),
            cof: a
                .cof
                .iter()
                .zip(&b.cof)
                .map(|(x, y)| &x.mul_term(&ma, &ka) + &y.mul_term(&mb, &kb))
                .collect(),
        }
    }

    fn tracked_reduce(t: &Tracked, by: &[Tracked], ord: &MonomialOrder) -> Tracked {
        Self::tracked_reduce_from(t, by, ord, false)
    }

    fn tracked_tail_reduce(t: &Tracked, by: &[Tracked], ord: &MonomialOrder) -> Tracked {
        Self::tracked_reduce_from(t, by, ord, true)
    }

    fn tracked_reduce_from(t: &Tracked, by: &[Tracked], ord: &MonomialOrder, skip_lead: bool) -> Tracked {
        let nvars = t.poly.nvars();
        let leads: Vec<(Monomial, Rational)> = by.iter().map(|b| lead(&b.poly, ord).unwrap()).collect();
        let mut work = to_keyed(&t.poly, ord);
        let mut rem = MultiPoly::zero(nvars);
        let mut cof = t.cof.clone();
        if skip_lead {
            if let Some((k, c)) = work.pop_last() {
                rem.add_term(k.mono.0, c);
            }
        }
        while let Some((k, c)) = work.pop_last() {
            let m = k.mono.0;
            let hit = leads.iter().position(|(l, _)| l.divides(&m));
            match hit {
                Some(i) => {
                    let q = leads[i].0.quotient_of(&m).unwrap();
                    let coef = &c / &leads[i].1;
                    // the leading term cancels exactly; reinsert it so the subtraction removes it
                    work.insert(ord.key(&m), c);
                    sub_scaled(&mut work, &by[i].poly, &q, &coef, ord);
                    for (dst, src) in cof.iter_mut().zip(&by[i].cof) {
                        *dst -= &src.mul_term(&q, &coef);
                    }
                }
                None => rem.add_term(m, c),
            }
        }
        Tracked { poly: rem, cof }
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn basis(&self) -> &[MultiPoly] {
        &self.basis
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leads
    }

    /// Cofactor rows: `basis[k] = Σ_j cofactors[k][j] · generators[j]`.
    pub fn cofactor_rows(&self) -> &[Vec<MultiPoly>] {
        &self.cofactors
    }

    fn divide(&self, p: &MultiPoly, track: bool) -> (MultiPoly, Vec<MultiPoly>) {
        let ord = &self.order;
        let mut work = to_keyed(p, ord);
        let mut rem = MultiPoly::zero(self.nvars);
        let mut quot = vec![MultiPoly::zero(self.nvars); if track { self.basis.len() } else { 0 }];
        while let Some((k, c)) = work.pop_last() {
            let RevLex(m) = k.mono;
            match self.leads.iter().position(|l| l.divides(&m)) {
                Some(i) => {
                    let q = self.leads[i].quotient_of(&m).unwrap();
                    work.insert(ord.key(&m), c.clone());
                    sub_scaled(&mut work, &self.basis[i], &q, &c, ord);
                    if track {
                        quot[i].add_term(q, c);
                    }
                }
                None => rem.add_term(m, c),
            }
        }
        (rem, quot)
    }

    /// Remainder of `p` only.
    pub fn reduce(&self, p: &MultiPoly) -> MultiPoly {
        self.divide(p, false).0
    }

    /// Remainder and cofactors with respect to the original generators, so that
    /// `p = remainder + Σ cofactors[j] · generators[j]`.
    pub fn normal_form(&self, p: &MultiPoly) -> NormalForm {
        let (remainder, quot) = self.divide(p, true);
        let mut cofactors = vec![MultiPoly::zero(self.nvars); self.generators.len()];
        for (q, row) in quot.iter().zip(&self.cofactors) {
            if q.is_zero() {
                continue;
            }
            for (dst, u) in cofactors.iter_mut().zip(row) {
                if !u.is_zero() {
                    *dst += &(q * u);
                }
            }
        }
        NormalForm { remainder, cofactors }
    }

    /// Standard monomials, or `None` when the quotient is infinite-dimensional.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        let n = self.nvars;
        let mut bounds = vec![u32::MAX; n];
        for l in &self.leads {
            let support: Vec<usize> = (0..n).filter(|&i| l.exponents()[i] > 0).collect();
            if support.len() == 1 {
                let i = support[0];
                bounds[i] = bounds[i].min(l.exponents()[i]);
            } else if support.is_empty() {
                return Some(Vec::new());
            }
        }
        if bounds.contains(&u32::MAX) {
            return None;
        }
        let mut out = Vec::new();
        let mut e = vec![0u32; n];
        self.enumerate(0, &bounds, &mut e, &mut out);
        Some(out)
    }

    fn enumerate(&self, i: usize, bounds: &[u32], e: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == e.len() {
            let m = Monomial::from_exponents(e.clone());
            if !self.leads.iter().any(|l| l.divides(&m)) {
                out.push(m);
            }
            return;
        }
        for k in 0..bounds[i] {
            e[i] = k;
            self.enumerate(i + 1, bounds, e, out);
        }
        e[i] = 0;
    }

    /// Monomial basis of the quotient, listed by non-increasing weighted degree.
    pub fn okbase(&self) -> Result<QuotientBasis> {
        let mut monos = self.standard_monomials().ok_or(Error::NotTame)?;
        monos.sort_by(|a, b| self.order.listing_cmp(a, b));
        Ok(QuotientBasis::new(monos, self.order.weights()))
    }

    /// Coordinates of the class of `p` in the basis `b`.
    pub fn coords(&self, p: &MultiPoly, b: &QuotientBasis) -> Vec<Rational> {
        let r = self.reduce(p);
        let mut v = vec![Rational::zero(); b.len()];
        for (m, c) in r.terms() {
            let i = b.index_of(m).expect("remainder outside the standard monomials");
            v[i] = c.clone();
        }
        v
    }

    /// Matrix of multiplication by `h`; row `β` holds the coordinates of `h·x^β`.
    pub fn mult_matrix(&self, h: &MultiPoly, b: &QuotientBasis) -> Vec<Vec<Rational>> {
        b.monomials()
            .iter()
            .map(|m| self.coords(&h.mul_term(m, &Rational::one()), b))
            .collect()
    }
}

/// Ordered monomial basis of a finite-dimensional quotient algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBasis {
    monos: Vec<Monomial>,
    degrees: Vec<u64>,
    index: HashMap<Monomial, usize>,
}

impl QuotientBasis {
    pub fn new(monos: Vec<Monomial>, alpha: &[u32]) -> Self {
        let degrees = monos.iter().map(|m| m.wdeg(alpha)).collect();
        let index = monos.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        QuotientBasis {
            monos,
            degrees,
            index,
        }
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monos
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// Milnor number `μ`.
    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn render(&self, names: &[String]) -> Vec<String> {
        self.monos.iter().map(|m| m.render(names)).collect()
    }
}

/// Whether the top weighted-homogeneous part of `f` has an isolated singularity.
pub fn is_tame(f: &MultiPoly, w: &WeightedVars) -> Result<bool> {
    let g = w.lasthomo(f)?;
    if g.wdeg(w.alpha()) == Some(0) {
        return Ok(false);
    }
    let gb = GroebnerBasis::jacobian(&g, w.alpha());
    Ok(gb.standard_monomials().is_some())
}
