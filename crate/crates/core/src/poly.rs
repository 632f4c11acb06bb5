//! Sparse commutative polynomials with exact coefficients.
//!
//! Two instances are used: [`GlPolynomial`] in the letterplace variables
//! `(x_i|x_j)` and [`SymPolynomial`] in `x_1, …, x_n`.

use std::cmp::{Ordering, Reverse};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::exact::Rational;

/// Variables a [`Poly`] can be built over.
pub trait PolyVar: Clone + Ord + fmt::Debug {
    fn write_var(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
    fn parse_var(s: &str) -> Option<Self>;
}

/// Index `i` of the variable `x_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct X(pub u32);

/// The letterplace variable `(x_i|x_j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lp(pub u32, pub u32);

impl PolyVar for X {
    fn write_var(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
    fn parse_var(s: &str) -> Option<Self> {
        let i: u32 = s.strip_prefix('x')?.parse().ok()?;
        (i > 0).then_some(X(i))
    }
}

impl PolyVar for Lp {
    fn write_var(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(x{}|x{})", self.0, self.1)
    }
    fn parse_var(s: &str) -> Option<Self> {
        let inner = s.strip_prefix("(x")?.strip_suffix(')')?;
        let (a, b) = inner.split_once("|x")?;
        let (a, b): (u32, u32) = (a.parse().ok()?, b.parse().ok()?);
        (a > 0 && b > 0).then_some(Lp(a, b))
    }
}

/// Sorted `(variable, exponent)` list with positive exponents.
pub type Monomial<V> = Vec<(V, u32)>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<V: PolyVar> {
    terms: BTreeMap<Monomial<V>, Rational>,
}

pub type SymPolynomial = Poly<X>;
pub type GlPolynomial = Poly<Lp>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse polynomial {0:?}")]
pub struct ParsePolyError(pub String);

fn mono_mul<V: PolyVar>(a: &Monomial<V>, b: &Monomial<V>) -> Monomial<V> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                out.push((a[i].0.clone(), a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl<V: PolyVar> Default for Poly<V> {
    fn default() -> Self {
        Poly { terms: BTreeMap::new() }
    }
}

impl<V: PolyVar> Poly<V> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::ONE)
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(Vec::new(), &c);
        p
    }

    pub fn var(v: V) -> Self {
        let mut p = Self::zero();
        p.add_term(vec![(v, 1)], &Rational::ONE);
        p
    }

    /// `v + c`
    pub fn var_plus(v: V, c: i64) -> Self {
        Self::var(v).add(&Self::constant(Rational::from_int(c)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial<V>, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial<V>) -> Rational {
        self.terms.get(m).cloned().unwrap_or(Rational::ZERO)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().map(|(_, e)| e).sum()).max()
    }

    /// Homogeneous component of the given total degree.
    pub fn homogeneous_part(&self, deg: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.iter().map(|(_, e)| e).sum::<u32>() == deg)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Poly { terms }
    }

    pub fn add_term(&mut self, m: Monomial<V>, c: &Rational) {
        if c.is_zero() {
            return;
        }
        if let Some(e) = self.terms.get_mut(&m) {
            *e += c;
            if e.is_zero() {
                self.terms.remove(&m);
            }
        } else {
            self.terms.insert(m, c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        for (m, d) in &other.terms {
            self.add_term(m.clone(), &(c * d));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::ONE);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::from_int(-1));
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&Rational::from_int(-1))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(mono_mul(a, b), &(x * y));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Product of a list of polynomials; empty product is 1.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Self>) -> Self
    where
        V: 'a,
    {
        factors.into_iter().fold(Self::one(), |acc, f| acc.mul(f))
    }

    pub fn partial(&self, v: &V) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if let Some(pos) = m.iter().position(|(w, _)| w == v) {
                let e = m[pos].1;
                let mut m2 = m.clone();
                if e == 1 {
                    m2.remove(pos);
                } else {
                    m2[pos].1 -= 1;
                }
                out.add_term(m2, &(c * &Rational::from_int(e as i64)));
            }
        }
        out
    }

    pub fn variables(&self) -> Vec<V> {
        let mut vs: Vec<V> = self.terms.keys().flat_map(|m| m.iter().map(|(v, _)| v.clone())).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn eval(&self, value: impl Fn(&V) -> Rational) -> Rational {
        let mut acc = Rational::ZERO;
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m {
                t *= &value(v).pow(*e);
            }
            acc += &t;
        }
        acc
    }

    /// Simultaneous substitution of every variable.
    pub fn substitute(&self, image: impl Fn(&V) -> Self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut t = Self::constant(c.clone());
            for (v, e) in m {
                t = t.mul(&image(v).pow(*e));
            }
            out = out.add(&t);
        }
        out
    }

    fn display_key(m: &Monomial<V>) -> (Reverse<u32>, Vec<(V, Reverse<u32>)>) {
        let deg = m.iter().map(|(_, e)| e).sum();
        (Reverse(deg), m.iter().map(|(v, e)| (v.clone(), Reverse(*e))).collect())
    }

    /// Terms in display order: higher total degree first, then lexicographic
    /// with lower-indexed variables first.
    pub fn sorted_terms(&self) -> Vec<(&Monomial<V>, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_cached_key(|(m, _)| Self::display_key(m));
        v
    }
}

impl SymPolynomial {
    /// Value at an integer point `(x_1, …, x_n)`.
    pub fn eval_at(&self, point: &[Rational]) -> Rational {
        self.eval(|v| point.get(v.0 as usize - 1).cloned().unwrap_or(Rational::ZERO))
    }
}

impl<V: PolyVar> fmt::Display for Poly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_empty() {
                write!(f, "{a}")?;
                continue;
            }
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            for (i, (v, e)) in m.iter().enumerate() {
                if i > 0 {
                    write!(f, "*")?;
                }
                v.write_var(f)?;
                if *e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl<V: PolyVar> FromStr for Poly<V> {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParsePolyError(s.to_string());
        let t = s.trim();
        if t.is_empty() {
            return Err(err());
        }
        let normalized = t.replace(" - ", " + -");
        let mut out = Self::zero();
        for term in normalized.split(" + ") {
            let term = term.trim();
            let (neg, body) = match term.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, term),
            };
            let mut coef = Rational::ONE;
            let mut mono: Monomial<V> = Vec::new();
            for factor in body.split('*') {
                if factor.is_empty() {
                    return Err(err());
                }
                if factor.starts_with(|c: char| c.is_ascii_digit()) {
                    coef *= &factor.parse::<Rational>().map_err(|_| err())?;
                    continue;
                }
                let (name, exp) = match factor.rsplit_once('^') {
                    Some((n, e)) => (n, e.parse::<u32>().map_err(|_| err())?),
                    None => (factor, 1),
                };
                let v = V::parse_var(name).ok_or_else(err)?;
                mono = mono_mul(&mono, &vec![(v, exp)]);
            }
            mono.retain(|(_, e)| *e > 0);
            if neg {
                coef = -coef;
            }
            out.add_term(mono, &coef);
        }
        Ok(out)
    }
}

/// `x_i` as a polynomial.
pub fn x(i: u32) -> SymPolynomial {
    SymPolynomial::var(X(i))
}

/// `(x_i|x_j)` as a polynomial.
pub fn lp(i: u32, j: u32) -> GlPolynomial {
    GlPolynomial::var(Lp(i, j))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let p = x(1).add(&SymPolynomial::one()).mul(&x(2));
        assert_eq!(p.to_string(), "x1*x2 + x2");
        assert_eq!(p.sub(&p), SymPolynomial::zero());
        assert_eq!(x(1).pow(3).partial(&X(1)), x(1).pow(2).scale(&Rational::from_int(3)));
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn display_order_and_signs() {
        let p = x(2).sub(&x(1).pow(2)).add(&x(1).mul(&x(2))).sub(&SymPolynomial::constant(Rational::new(3, 2)));
        assert_eq!(p.to_string(), "-x1^2 + x1*x2 + x2 - 3/2");
        assert_eq!(SymPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["x1*x2 + x2", "-x1^2 + 2/3*x1*x3 - 7", "0", "5"] {
            let p: SymPolynomial = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        let g: GlPolynomial = "-(x1|x2)*(x2|x1) + (x1|x1)".parse().unwrap();
        assert_eq!(g, lp(1, 1).sub(&lp(1, 2).mul(&lp(2, 1))));
        assert!("x1 +".parse::<SymPolynomial>().is_err());
    }

    #[test]
    fn eval_and_substitute() {
        let p = x(1).mul(&x(2)).add(&x(2));
        let v = p.eval_at(&[Rational::from_int(3), Rational::from_int(2)]);
        assert_eq!(v, Rational::from_int(8));
        let swapped = p.substitute(|v| x(3 - v.0));
        assert_eq!(swapped, x(1).mul(&x(2)).add(&x(1)));
    }
}
