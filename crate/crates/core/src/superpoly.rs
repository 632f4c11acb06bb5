//! The supersymmetric algebra ℂ[M_{m₁|m₂+n,d}] and its superpolarizations.
//!
//! A variable `(a|j)` has parity `|a| + 1`: variables on even virtual
//! symbols anticommute, variables on odd virtual and proper symbols commute.
//! Monomials keep their variables sorted by `(kind, index, place)`; the sign
//! picked up while sorting is folded into the coefficient.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::exact::Rational;
use crate::symbol::{Parity, Symbol, SymbolKind};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SuperPolyError {
    #[error("bracket of {n} vectors needs at least {n} places, got d = {d}")]
    TooFewPlaces { n: usize, d: usize },
    #[error("operation is defined on proper variables only, found {0}")]
    VirtualVariable(String),
    #[error("variable {var} has place outside 1..={d}")]
    PlaceOutOfRange { var: String, d: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperVariable {
    pub symbol: Symbol,
    pub place: u32,
}

impl SuperVariable {
    pub fn new(symbol: Symbol, place: u32) -> Self {
        SuperVariable { symbol, place }
    }

    pub fn proper(i: u32, place: u32) -> Self {
        SuperVariable::new(Symbol::proper(i), place)
    }

    pub fn parity(self) -> Parity {
        self.symbol.parity().flip()
    }

    pub fn is_odd(self) -> bool {
        self.parity().is_odd()
    }
}

impl fmt::Display for SuperVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}|{})", self.symbol.letter(), self.symbol.index, self.place)
    }
}

/// Sorted `(variable, exponent)` pairs; odd variables have exponent 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SuperMonomial(Vec<(SuperVariable, u32)>);

impl SuperMonomial {
    pub fn one() -> Self {
        SuperMonomial(Vec::new())
    }

    pub fn var(v: SuperVariable) -> Self {
        SuperMonomial(vec![(v, 1)])
    }

    pub fn factors(&self) -> &[(SuperVariable, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn parity(&self) -> Parity {
        let odd = self.0.iter().filter(|(v, _)| v.is_odd()).count();
        Parity::from_bit((odd % 2) as u8)
    }

    pub fn is_proper(&self) -> bool {
        self.0.iter().all(|(v, _)| v.symbol.is_proper())
    }

    /// Product of two canonical monomials with the reordering sign, or
    /// `None` when an odd variable would appear twice.
    pub fn mul(&self, other: &SuperMonomial) -> Option<(SuperMonomial, bool)> {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut negate = false;
        // odd variables of `a` not yet emitted; each odd variable of `b`
        // emitted before them passes over all of them.
        let mut odd_pending_a = a.iter().filter(|(v, _)| v.is_odd()).count();
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let take_a = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => {
                    if x.0 == y.0 {
                        if x.0.is_odd() {
                            return None;
                        }
                        out.push((x.0, x.1 + y.1));
                        i += 1;
                        j += 1;
                        continue;
                    }
                    x.0 < y.0
                }
                (Some(_), None) => true,
                _ => false,
            };
            if take_a {
                if a[i].0.is_odd() {
                    odd_pending_a -= 1;
                }
                out.push(a[i]);
                i += 1;
            } else {
                if b[j].0.is_odd() && odd_pending_a % 2 == 1 {
                    negate = !negate;
                }
                out.push(b[j]);
                j += 1;
            }
        }
        Some((SuperMonomial(out), negate))
    }
}

impl fmt::Display for SuperMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "{v}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SuperPolynomial {
    terms: BTreeMap<SuperMonomial, Rational>,
}

impl SuperPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::ONE)
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(SuperMonomial::one(), c)
    }

    pub fn var(v: SuperVariable) -> Self {
        Self::term(SuperMonomial::var(v), Rational::ONE)
    }

    pub fn term(m: SuperMonomial, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, &c);
        p
    }

    /// Product of the given variables, in the written order.
    pub fn product_of(vars: &[SuperVariable]) -> Self {
        vars.iter().fold(Self::one(), |acc, v| acc.mul(&Self::var(*v)))
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

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &SuperMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or(Rational::ZERO)
    }

    pub fn add_term(&mut self, m: SuperMonomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &SuperPolynomial, c: &Rational) {
        for (m, k) in &other.terms {
            self.add_term(m.clone(), &(k * c));
        }
    }

    pub fn add(&self, other: &SuperPolynomial) -> SuperPolynomial {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::ONE);
        out
    }

    pub fn sub(&self, other: &SuperPolynomial) -> SuperPolynomial {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::from_int(-1));
        out
    }

    pub fn scale(&self, c: &Rational) -> SuperPolynomial {
        let mut out = SuperPolynomial::zero();
        out.add_scaled(self, c);
        out
    }

    /// Supercommutative product.
    pub fn mul(&self, other: &SuperPolynomial) -> SuperPolynomial {
        let mut out = SuperPolynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((m, neg)) = ma.mul(mb) {
                    let c = ca * cb;
                    out.add_term(m, &if neg { -c } else { c });
                }
            }
        }
        out
    }

    /// Parity of a Z₂-homogeneous polynomial (`None` if mixed; zero is even).
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(|m| m.parity());
        let first = it.next().unwrap_or(Parity::Even);
        it.all(|p| p == first).then_some(first)
    }

    pub fn is_proper(&self) -> bool {
        self.terms.keys().all(|m| m.is_proper())
    }

    pub fn max_place(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(v, _)| v.place))
            .max()
            .unwrap_or(0)
    }

    fn check_proper(&self) -> Result<(), SuperPolyError> {
        for m in self.terms.keys() {
            if let Some((v, _)) = m.0.iter().find(|(v, _)| v.symbol.is_virtual()) {
                return Err(SuperPolyError::VirtualVariable(v.to_string()));
            }
        }
        Ok(())
    }

    fn check_places(&self, d: usize) -> Result<(), SuperPolyError> {
        for m in self.terms.keys() {
            if let Some((v, _)) = m.0.iter().find(|(v, _)| v.place as usize > d || v.place == 0) {
                return Err(SuperPolyError::PlaceOutOfRange { var: v.to_string(), d });
            }
        }
        Ok(())
    }

    /// Ordinary partial derivative with respect to a commuting variable.
    pub fn partial(&self, v: SuperVariable) -> SuperPolynomial {
        assert!(!v.is_odd(), "partial derivative is only used on even variables");
        let mut out = SuperPolynomial::zero();
        for (m, c) in &self.terms {
            if let Some(pos) = m.0.iter().position(|(w, _)| *w == v) {
                let e = m.0[pos].1;
                let mut f = m.0.clone();
                if e == 1 {
                    f.remove(pos);
                } else {
                    f[pos].1 -= 1;
                }
                out.add_term(SuperMonomial(f), &(c * &Rational::from_int(e as i64)));
            }
        }
        out
    }
}

/// Parity of the superpolarization `D_{a,b}`.
pub fn polarization_parity(a: Symbol, b: Symbol) -> Parity {
    a.parity() + b.parity()
}

/// `D_{a,b}` on a single monomial.
fn superpolarize_monomial(a: Symbol, b: Symbol, m: &SuperMonomial, out: &mut SuperPolynomial, coef: &Rational) {
    let dpar = polarization_parity(a, b).is_odd();
    let mut prefix_odd = 0usize;
    for (pos, (v, e)) in m.0.iter().enumerate() {
        if v.symbol == b {
            // m = P · v^e · S  ↦  (−1)^{|D||P|} e · P v^{e−1} (a|j) S
            let image = SuperVariable::new(a, v.place);
            let mut head: Vec<(SuperVariable, u32)> = m.0[..pos].to_vec();
            if *e > 1 {
                head.push((*v, e - 1));
            }
            let head = SuperMonomial(head);
            let tail = SuperMonomial(m.0[pos + 1..].to_vec());
            if let Some((hw, n1)) = head.mul(&SuperMonomial::var(image)) {
                if let Some((full, n2)) = hw.mul(&tail) {
                    let mut c = coef * &Rational::from_int(*e as i64);
                    let flip = n1 ^ n2 ^ (dpar && prefix_odd % 2 == 1);
                    if flip {
                        c = -c;
                    }
                    out.add_term(full, &c);
                }
            }
        }
        if v.is_odd() {
            prefix_odd += *e as usize;
        }
    }
}

/// The superpolarization `D_{a,b}`: the superderivation of parity `|a|+|b|`
/// with `D_{a,b}((c|j)) = δ_{bc}(a|j)`.
pub fn superpolarize(a: Symbol, b: Symbol, p: &SuperPolynomial) -> SuperPolynomial {
    let mut out = SuperPolynomial::zero();
    for (m, c) in &p.terms {
        superpolarize_monomial(a, b, m, &mut out, c);
    }
    out
}

/// Applies `D_{a_m,b_m} ∘ … ∘ D_{a_1,b_1}`; the last pair of `word` acts first.
pub fn apply_polarization_word(word: &[(Symbol, Symbol)], p: &SuperPolynomial) -> SuperPolynomial {
    let mut cur = p.clone();
    for &(a, b) in word.iter().rev() {
        if cur.is_zero() {
            break;
        }
        cur = superpolarize(a, b, &cur);
    }
    cur
}

/// Iterates all permutations of `0..k` together with their signs.
pub fn permutations_with_sign(k: usize) -> Vec<(Vec<usize>, bool)> {
    // Heap's algorithm; each swap flips the sign.
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..k).collect();
    let mut c = vec![0usize; k];
    let mut odd = false;
    out.push((perm.clone(), odd));
    let mut i = 1;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            odd = !odd;
            out.push((perm.clone(), odd));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// The bracket `[x_1,…,x_n] = det[(x_i|j)]_{i,j ≤ n}`.
pub fn bracket(n: usize, d: usize) -> Result<SuperPolynomial, SuperPolyError> {
    if n > d {
        return Err(SuperPolyError::TooFewPlaces { n, d });
    }
    let mut out = SuperPolynomial::zero();
    for (perm, odd) in permutations_with_sign(n) {
        let vars: Vec<SuperVariable> =
            (0..n).map(|i| SuperVariable::proper(i as u32 + 1, perm[i] as u32 + 1)).collect();
        let c = if odd { Rational::from_int(-1) } else { Rational::ONE };
        out.add_scaled(&SuperPolynomial::product_of(&vars), &c);
    }
    Ok(out)
}

/// The Cayley operator `Ω_n = det[∂/∂(x_i|j)]` on a proper form.
pub fn cayley_apply(n: usize, f: &SuperPolynomial) -> Result<SuperPolynomial, SuperPolyError> {
    f.check_proper()?;
    let mut out = SuperPolynomial::zero();
    for (perm, odd) in permutations_with_sign(n) {
        let mut cur = f.clone();
        for (i, &j) in perm.iter().enumerate() {
            cur = cur.partial(SuperVariable::proper(i as u32 + 1, j as u32 + 1));
            if cur.is_zero() {
                break;
            }
        }
        let c = if odd { Rational::from_int(-1) } else { Rational::ONE };
        out.add_scaled(&cur, &c);
    }
    Ok(out)
}

/// The classical Capelli operator
/// `H_{n,d} = cdet(D_{x_i,x_j} + δ_{ij}(n−i))`, expanded by permutations;
/// within each product the factor of the last column acts first.
pub fn capelli_operator_apply(n: usize, d: usize, f: &SuperPolynomial) -> Result<SuperPolynomial, SuperPolyError> {
    f.check_proper()?;
    f.check_places(d)?;
    let mut out = SuperPolynomial::zero();
    for (perm, odd) in permutations_with_sign(n) {
        let mut cur = f.clone();
        for col in (0..n).rev() {
            let row = perm[col];
            let mut next = superpolarize(Symbol::proper(row as u32 + 1), Symbol::proper(col as u32 + 1), &cur);
            if row == col {
                next.add_scaled(&cur, &Rational::from_int((n - 1 - row) as i64));
            }
            cur = next;
            if cur.is_zero() {
                break;
            }
        }
        let c = if odd { Rational::from_int(-1) } else { Rational::ONE };
        out.add_scaled(&cur, &c);
    }
    Ok(out)
}

/// Uniform random proper monomial in ℂ[M_{n,d}] with exponents `≤ max_exp`
/// and total degree `≤ max_deg` (possibly the constant 1).
pub fn random_proper_monomial<R: Rng>(rng: &mut R, n: usize, d: usize, max_exp: u32, max_deg: u32) -> SuperPolynomial {
    let target = rng.gen_range(0..=max_deg);
    let mut exps: BTreeMap<SuperVariable, u32> = BTreeMap::new();
    let mut deg = 0;
    let mut guard = 0;
    while deg < target && guard < 1000 {
        guard += 1;
        let v = SuperVariable::proper(rng.gen_range(1..=n as u32), rng.gen_range(1..=d as u32));
        let e = exps.entry(v).or_insert(0);
        if *e < max_exp {
            *e += 1;
            deg += 1;
        }
    }
    SuperPolynomial::term(SuperMonomial(exps.into_iter().collect()), Rational::ONE)
}

/// All proper monomials in ℂ[M_{n,d}] of total degree `≤ max_deg`.
pub fn all_proper_monomials(n: usize, d: usize, max_deg: u32) -> Vec<SuperPolynomial> {
    let vars: Vec<SuperVariable> = (1..=n as u32)
        .flat_map(|i| (1..=d as u32).map(move |j| SuperVariable::proper(i, j)))
        .collect();
    let mut out = Vec::new();
    let mut cur: Vec<(SuperVariable, u32)> = Vec::new();
    fn rec(
        vars: &[SuperVariable],
        start: usize,
        left: u32,
        cur: &mut Vec<(SuperVariable, u32)>,
        out: &mut Vec<SuperPolynomial>,
    ) {
        out.push(SuperPolynomial::term(SuperMonomial(cur.clone()), Rational::ONE));
        if left == 0 {
            return;
        }
        for k in start..vars.len() {
            for e in 1..=left {
                cur.push((vars[k], e));
                rec(vars, k + 1, left - e, cur, out);
                cur.pop();
            }
        }
    }
    rec(&vars, 0, max_deg, &mut cur, &mut out);
    out
}

impl fmt::Display for SuperPolynomial {
    /// `c*(x:1|1)^2*(a:1|2) + c*…` with every coefficient as `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", c.to_fraction_string())?;
            if !m.0.is_empty() {
                write!(f, "*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for SuperPolynomial {
    type Err = SuperPolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "0" {
            return Ok(SuperPolynomial::zero());
        }
        let perr = |msg: &str| SuperPolyError::Parse(format!("{msg} in {t:?}"));
        let mut out = SuperPolynomial::zero();
        for term in t.split(" + ") {
            let mut parts = term.split('*');
            let coef: Rational = parts
                .next()
                .ok_or_else(|| perr("empty term"))?
                .parse()
                .map_err(|_| perr("bad coefficient"))?;
            let mut acc = SuperPolynomial::constant(coef);
            for factor in parts {
                let (var, exp) = match factor.split_once('^') {
                    Some((v, e)) => (v, e.parse::<u32>().map_err(|_| perr("bad exponent"))?),
                    None => (factor, 1),
                };
                let inner = var
                    .strip_prefix('(')
                    .and_then(|v| v.strip_suffix(')'))
                    .ok_or_else(|| perr("bad variable"))?;
                let (sym, place) = inner.split_once('|').ok_or_else(|| perr("missing place"))?;
                let (letter, idx) = sym.split_once(':').ok_or_else(|| perr("missing symbol index"))?;
                let index: u32 = idx.parse().map_err(|_| perr("bad symbol index"))?;
                let kind = match letter {
                    "x" => SymbolKind::Proper,
                    "a" => SymbolKind::VirtualEven,
                    "b" => SymbolKind::VirtualOdd,
                    _ => return Err(perr("unknown symbol family")),
                };
                let place: u32 = place.parse().map_err(|_| perr("bad place"))?;
                let v = SuperVariable::new(Symbol { kind, index }, place);
                for _ in 0..exp {
                    acc = acc.mul(&SuperPolynomial::var(v));
                }
            }
            out.add_scaled(&acc, &Rational::ONE);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn x(i: u32, j: u32) -> SuperPolynomial {
        SuperPolynomial::var(SuperVariable::proper(i, j))
    }
    fn alpha(j: u32) -> SuperPolynomial {
        SuperPolynomial::var(SuperVariable::new(Symbol::virtual_even(1), j))
    }
    fn xs(i: u32) -> Symbol {
        Symbol::proper(i)
    }
    const A: Symbol = Symbol { kind: SymbolKind::VirtualEven, index: 1 };

    #[test]
    fn odd_variables_anticommute() {
        assert!(alpha(1).mul(&alpha(1)).is_zero());
        assert_eq!(alpha(2).mul(&alpha(1)), alpha(1).mul(&alpha(2)).scale(&Rational::from_int(-1)));
        let sq = x(1, 1).mul(&x(1, 1));
        assert_eq!(sq.len(), 1);
        assert_eq!(sq.to_string(), "1/1*(x:1|1)^2");
    }

    #[test]
    fn polarization_generator_and_leibniz() {
        assert_eq!(superpolarize(xs(1), xs(2), &x(2, 1)), x(1, 1));
        assert!(superpolarize(xs(1), xs(2), &SuperPolynomial::one()).is_zero());
        let f = x(1, 1).mul(&x(1, 2));
        let expected = alpha(1).mul(&x(1, 2)).add(&x(1, 1).mul(&alpha(2)));
        assert_eq!(superpolarize(A, xs(1), &f), expected);
    }

    #[test]
    fn polarization_words() {
        let f = alpha(1).mul(&alpha(2));
        assert_eq!(apply_polarization_word(&[], &f), f);
        let got = apply_polarization_word(&[(xs(2), A), (xs(1), A)], &f);
        let expected = x(1, 1).mul(&x(2, 2)).sub(&x(2, 1).mul(&x(1, 2)));
        assert_eq!(got, expected);
        let sq = x(1, 1).mul(&x(1, 1));
        assert_eq!(apply_polarization_word(&[(xs(1), xs(1))], &sq), sq.scale(&Rational::from_int(2)));
    }

    #[test]
    fn brackets() {
        assert_eq!(bracket(1, 1).unwrap(), x(1, 1));
        assert_eq!(bracket(2, 2).unwrap(), x(1, 1).mul(&x(2, 2)).sub(&x(2, 1).mul(&x(1, 2))));
        assert!(matches!(bracket(3, 2), Err(SuperPolyError::TooFewPlaces { .. })));
        for n in 1..=4u32 {
            let word: Vec<(Symbol, Symbol)> = (1..=n).rev().map(|i| (xs(i), A)).collect();
            let vars: Vec<SuperVariable> = (1..=n).map(|j| SuperVariable::new(A, j)).collect();
            let virt = apply_polarization_word(&word, &SuperPolynomial::product_of(&vars));
            assert_eq!(virt, bracket(n as usize, n as usize).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn cayley_operator() {
        assert_eq!(cayley_apply(1, &x(1, 1)).unwrap(), SuperPolynomial::one());
        assert_eq!(cayley_apply(2, &bracket(2, 2).unwrap()).unwrap(), SuperPolynomial::constant(Rational::from_int(2)));
        assert!(cayley_apply(2, &x(1, 1)).unwrap().is_zero());
        assert!(cayley_apply(1, &alpha(1)).is_err());
    }

    #[test]
    fn capelli_operator_examples() {
        assert_eq!(capelli_operator_apply(1, 1, &x(1, 1)).unwrap(), x(1, 1));
        assert!(capelli_operator_apply(2, 1, &x(1, 1).mul(&x(2, 1))).unwrap().is_zero());
        let b = bracket(2, 2).unwrap();
        assert_eq!(capelli_operator_apply(2, 2, &b).unwrap(), b.scale(&Rational::from_int(2)));
        assert!(capelli_operator_apply(2, 1, &x(1, 2)).is_err());
    }

    #[test]
    fn permutation_signs() {
        let perms = permutations_with_sign(3);
        assert_eq!(perms.len(), 6);
        for (p, odd) in perms {
            let inv = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            assert_eq!(inv % 2 == 1, odd);
        }
    }

    #[test]
    fn enumerate_monomials() {
        // degree ≤ 2 in 4 variables: 1 + 4 + 10
        assert_eq!(all_proper_monomials(2, 2, 2).len(), 15);
    }

    #[test]
    fn text_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let f = random_proper_monomial(&mut rng, 2, 3, 3, 5).mul(&alpha(2)).add(&x(1, 1).scale(&Rational::new(-3, 2)));
            let back: SuperPolynomial = f.to_string().parse().unwrap();
            assert_eq!(back, f);
        }
        assert_eq!("0".parse::<SuperPolynomial>().unwrap(), SuperPolynomial::zero());
    }
}
