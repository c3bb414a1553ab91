use std::cmp::Ordering;
use std::fmt;

/// Exponent vector `x_1^{e_1} ... x_m^{e_m}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Weighted degree `sum e_i * alpha_i`.
    pub fn wdeg(&self, alpha: &[u32]) -> u64 {
        self.0
            .iter()
            .zip(alpha)
            .map(|(&e, &a)| e as u64 * a as u64)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(
                other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Exponent vector with `x_i` lowered by one, or `None` when `e_i = 0`.
    pub fn lower(&self, i: usize) -> Option<Monomial> {
        if self.0[i] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[i] -= 1;
        Some(Monomial(e))
    }

    pub fn raise(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e[i] += 1;
        Monomial(e)
    }

    /// Reverse-lexicographic comparison for monomials of equal weighted degree:
    /// the one with the smaller exponent in the last differing variable is larger.
    pub fn revlex_cmp(&self, other: &Monomial) -> Ordering {
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord.reverse(),
            }
        }
        Ordering::Equal
    }

    /// Render in the compact `x2y` style with the given variable names.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut s = String::new();
        for (e, name) in self.0.iter().zip(names) {
            match e {
                0 => {}
                1 => s.push_str(name),
                _ => {
                    s.push_str(name);
                    s.push_str(&e.to_string());
                }
            }
        }
        s
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.0.len()).map(|i| format!("x{i}_")).collect();
        write!(f, "{}", self.render(&names))
    }
}

/// Term order used for Groebner bases and normal forms: weighted degree,
/// ties broken reverse-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    alpha: Vec<u32>,
}

impl MonomialOrder {
    pub fn new(alpha: Vec<u32>) -> Self {
        MonomialOrder { alpha }
    }

    pub fn weights(&self) -> &[u32] {
        &self.alpha
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.wdeg(&self.alpha)
            .cmp(&b.wdeg(&self.alpha))
            .then_with(|| a.revlex_cmp(b))
    }

    pub fn key(&self, m: &Monomial) -> OrderKey {
        OrderKey {
            wdeg: m.wdeg(&self.alpha),
            mono: RevLex(m.clone()),
        }
    }

    /// Listing order of quotient bases: weighted degree descending, ties put
    /// the larger exponent of the last variable first.
    pub fn listing_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        b.wdeg(&self.alpha)
            .cmp(&a.wdeg(&self.alpha))
            .then_with(|| a.revlex_cmp(b))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RevLex(pub Monomial);

impl Ord for RevLex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.revlex_cmp(&other.0)
    }
}

impl PartialOrd for RevLex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sort key realising [`MonomialOrder`] inside ordered maps.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct OrderKey {
    pub wdeg: u64,
    pub mono: RevLex,
}
