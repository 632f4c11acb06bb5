//! U(gl(m₁|m₂+n)) in PBW normal form.
//!
//! Generators are packed into a single `u64` whose natural order is the PBW
//! order: proper lowering < proper Cartan < proper raising < virtual row with
//! proper column < anything with a virtual column. Straightening swaps
//! adjacent out-of-order generators, `g·h = (−1)^{|g||h|} h·g + [g,h]`, and
//! kills squares of odd generators. Results of `generator · monomial` are
//! memoized per thread.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::exact::Rational;
use crate::superpoly::permutations_with_sign;
use crate::symbol::{Parity, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum UeaError {
    #[error("adjoint action is only taken by proper generators, got {0}")]
    NonProperAdjoint(Generator),
    #[error("element lies outside U(gl(n)): contains {0}")]
    VirtualGenerator(Generator),
    #[error("generator {0} has an index above n = {1}")]
    IndexOutOfRange(Generator, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("matrix is not square")]
    NotSquare,
}

/// PBW class of a generator; the declaration order is the PBW block order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum GeneratorClass {
    Lowering,
    Cartan,
    Raising,
    VirtualRow,
    VirtualColumn,
}

/// The elementary matrix `e_{row,col}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator(u64);

impl Generator {
    pub fn new(row: Symbol, col: Symbol) -> Self {
        let class = if col.is_virtual() {
            GeneratorClass::VirtualColumn
        } else if row.is_virtual() {
            GeneratorClass::VirtualRow
        } else {
            match row.index.cmp(&col.index) {
                Ordering::Greater => GeneratorClass::Lowering,
                Ordering::Equal => GeneratorClass::Cartan,
                Ordering::Less => GeneratorClass::Raising,
            }
        };
        Generator(((class as u64) << 40) | (row.code() << 20) | col.code())
    }

    /// `e_{x_i,x_j}`.
    pub fn proper(i: u32, j: u32) -> Self {
        Generator::new(Symbol::proper(i), Symbol::proper(j))
    }

    pub fn row(self) -> Symbol {
        Symbol::from_code((self.0 >> 20) & 0xF_FFFF)
    }

    pub fn col(self) -> Symbol {
        Symbol::from_code(self.0 & 0xF_FFFF)
    }

    pub fn class(self) -> GeneratorClass {
        match self.0 >> 40 {
            0 => GeneratorClass::Lowering,
            1 => GeneratorClass::Cartan,
            2 => GeneratorClass::Raising,
            3 => GeneratorClass::VirtualRow,
            _ => GeneratorClass::VirtualColumn,
        }
    }

    pub fn parity(self) -> Parity {
        self.row().parity() + self.col().parity()
    }

    pub fn is_odd(self) -> bool {
        self.parity().is_odd()
    }

    pub fn is_proper(self) -> bool {
        self.class() <= GeneratorClass::Raising
    }

    pub fn has_virtual_column(self) -> bool {
        self.class() == GeneratorClass::VirtualColumn
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e[{},{}]", self.row(), self.col())
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `[e_{a,b}, e_{c,d}] = δ_{bc} e_{a,d} − (−1)^{(|a|+|b|)(|c|+|d|)} δ_{ad} e_{c,b}`.
pub fn super_commutator_terms(g: Generator, h: Generator) -> Vec<(Generator, Rational)> {
    let (a, b, c, d) = (g.row(), g.col(), h.row(), h.col());
    let mut out: Vec<(Generator, Rational)> = Vec::with_capacity(2);
    if b == c {
        out.push((Generator::new(a, d), Rational::ONE));
    }
    if a == d {
        let sign = if g.is_odd() && h.is_odd() { Rational::ONE } else { Rational::from_int(-1) };
        let k = Generator::new(c, b);
        if let Some(pos) = out.iter().position(|(x, _)| *x == k) {
            out[pos].1 += &sign;
            if out[pos].1.is_zero() {
                out.remove(pos);
            }
        } else {
            out.push((k, sign));
        }
    }
    out
}

pub fn super_commutator(g: Generator, h: Generator) -> UeaElement {
    let mut out = UeaElement::zero();
    for (k, c) in super_commutator_terms(g, h) {
        out.add_term(PbwMonomial(vec![k]), &c);
    }
    out
}

/// A nondecreasing generator sequence.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PbwMonomial(pub(crate) Vec<Generator>);

impl PbwMonomial {
    pub fn one() -> Self {
        PbwMonomial(Vec::new())
    }

    pub fn generators(&self) -> &[Generator] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_proper(&self) -> bool {
        self.0.iter().all(|g| g.is_proper())
    }

    pub fn is_canonical(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1] || (w[0] == w[1] && !w[0].is_odd()))
    }

    /// Display order of terms: higher degree first, then lexicographic.
    pub fn display_cmp(&self, other: &Self) -> Ordering {
        other.0.len().cmp(&self.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Debug for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for g in &self.0 {
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

type Terms = Vec<(PbwMonomial, Rational)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mode {
    /// Exact normal form in U(gl(m₁|m₂+n)).
    Full,
    /// Left-module arithmetic in U / Irr: a monomial whose greatest
    /// generator has a virtual column ends in an irregular expression and is
    /// discarded as soon as it appears.
    ModuloIrregular,
}

struct Straightener {
    mode: Mode,
    cache: FxHashMap<(Generator, PbwMonomial), Rc<Terms>>,
}

fn accumulate(acc: &mut FxHashMap<PbwMonomial, Rational>, m: &PbwMonomial, c: &Rational) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(m) {
        Some(v) => {
            *v += c;
        }
        None => {
            acc.insert(m.clone(), c.clone());
        }
    }
}

fn finish(acc: FxHashMap<PbwMonomial, Rational>) -> Terms {
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

impl Straightener {
    fn new(mode: Mode) -> Self {
        Straightener { mode, cache: FxHashMap::default() }
    }

    /// `g · m` for a canonical monomial `m`.
    fn gen_mul(&mut self, g: Generator, m: &PbwMonomial) -> Rc<Terms> {
        let key = (g, m.clone());
        if let Some(hit) = self.cache.get(&key) {
            return hit.clone();
        }
        let result = Rc::new(self.gen_mul_uncached(g, m));
        self.cache.insert(key, result.clone());
        result
    }

    fn gen_mul_uncached(&mut self, g: Generator, m: &PbwMonomial) -> Terms {
        let Some(&h) = m.0.first() else {
            if self.mode == Mode::ModuloIrregular && g.has_virtual_column() {
                // g stands rightmost: the word consumes a virtual symbol
                // nothing has created yet.
                assert!(
                    crate::virt::is_irregular(&[g]),
                    "internal consistency: {g} dropped without an irregularity certificate"
                );
                return Vec::new();
            }
            return vec![(PbwMonomial(vec![g]), Rational::ONE)];
        };
        if g < h || (g == h && !g.is_odd()) {
            let mut w = Vec::with_capacity(m.0.len() + 1);
            w.push(g);
            w.extend_from_slice(&m.0);
            return vec![(PbwMonomial(w), Rational::ONE)];
        }
        if g == h {
            // odd g: g² = ½[g,g] and [g,g] = 0 for elementary matrices.
            return Vec::new();
        }
        let rest = PbwMonomial(m.0[1..].to_vec());
        let mut acc: FxHashMap<PbwMonomial, Rational> = FxHashMap::default();
        let swap_sign = if g.is_odd() && h.is_odd() { Rational::from_int(-1) } else { Rational::ONE };
        let moved = self.gen_mul(g, &rest);
        for (mm, c) in moved.iter() {
            let c = c * &swap_sign;
            let placed = self.gen_mul(h, mm);
            for (m2, c2) in placed.iter() {
                accumulate(&mut acc, m2, &(&c * c2));
            }
        }
        for (k, c) in super_commutator_terms(g, h) {
            let t = self.gen_mul(k, &rest);
            for (m2, c2) in t.iter() {
                accumulate(&mut acc, m2, &(&c * c2));
            }
        }
        finish(acc)
    }

    /// Normal form of a word (first factor leftmost).
    fn word(&mut self, w: &[Generator]) -> FxHashMap<PbwMonomial, Rational> {
        let mut state: FxHashMap<PbwMonomial, Rational> = FxHashMap::default();
        state.insert(PbwMonomial::one(), Rational::ONE);
        self.left_apply_word(w, state)
    }

    fn left_apply_word(
        &mut self,
        w: &[Generator],
        mut state: FxHashMap<PbwMonomial, Rational>,
    ) -> FxHashMap<PbwMonomial, Rational> {
        for &g in w.iter().rev() {
            let mut next: FxHashMap<PbwMonomial, Rational> = FxHashMap::default();
            for (m, c) in &state {
                let t = self.gen_mul(g, m);
                for (m2, c2) in t.iter() {
                    accumulate(&mut next, m2, &(c * c2));
                }
            }
            next.retain(|_, c| !c.is_zero());
            state = next;
        }
        state
    }
}

thread_local! {
    static FULL: RefCell<Straightener> = RefCell::new(Straightener::new(Mode::Full));
    static MODULO: RefCell<Straightener> = RefCell::new(Straightener::new(Mode::ModuloIrregular));
}

fn with_straightener<T>(mode: Mode, f: impl FnOnce(&mut Straightener) -> T) -> T {
    let cell = match mode {
        Mode::Full => &FULL,
        Mode::ModuloIrregular => &MODULO,
    };
    cell.with(|s| f(&mut s.borrow_mut()))
}

/// Drops the memo tables of the calling thread.
pub fn clear_caches() {
    FULL.with(|s| s.borrow_mut().cache.clear());
    MODULO.with(|s| s.borrow_mut().cache.clear());
}

/// Normal form of a generator word in U / Irr (see [`Mode::ModuloIrregular`]).
pub(crate) fn word_modulo_irregular(w: &[Generator]) -> UeaElement {
    UeaElement { terms: with_straightener(Mode::ModuloIrregular, |s| s.word(w)) }
}

/// Element of the enveloping algebra: PBW monomial ↦ coefficient.
#[derive(Clone, Default)]
pub struct UeaElement {
    terms: FxHashMap<PbwMonomial, Rational>,
}

impl PartialEq for UeaElement {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for UeaElement {}

impl UeaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(Rational::ONE)
    }

    pub fn scalar(c: Rational) -> Self {
        let mut u = Self::zero();
        u.add_term(PbwMonomial::one(), &c);
        u
    }

    pub fn generator(g: Generator) -> Self {
        let mut u = Self::zero();
        u.add_term(PbwMonomial(vec![g]), &Rational::ONE);
        u
    }

    /// `e_{x_i,x_j}`.
    pub fn e(i: u32, j: u32) -> Self {
        Self::generator(Generator::proper(i, j))
    }

    /// Product of the generators of `w` in the written order.
    pub fn from_word(w: &[Generator]) -> Self {
        UeaElement { terms: with_straightener(Mode::Full, |s| s.word(w)) }
    }

    pub(crate) fn from_terms(terms: FxHashMap<PbwMonomial, Rational>) -> Self {
        let mut terms = terms;
        terms.retain(|_, c| !c.is_zero());
        UeaElement { terms }
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

    pub fn coefficient(&self, m: &[Generator]) -> Rational {
        self.terms.get(&PbwMonomial(m.to_vec())).cloned().unwrap_or(Rational::ZERO)
    }

    /// Scalar part (coefficient of the empty monomial).
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&[])
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: &Rational) {
        debug_assert!(m.is_canonical());
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    /// Terms in display order.
    pub fn sorted_terms(&self) -> Vec<(&PbwMonomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.display_cmp(b.0));
        v
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn is_proper(&self) -> bool {
        self.terms.keys().all(|m| m.is_proper())
    }

    pub fn first_virtual_generator(&self) -> Option<Generator> {
        self.terms.keys().flat_map(|m| m.0.iter()).copied().find(|g| !g.is_proper())
    }

    pub fn add_scaled(&mut self, other: &UeaElement, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (m, k) in &other.terms {
            accumulate(&mut self.terms, m, &(k * c));
        }
        self.terms.retain(|_, v| !v.is_zero());
    }

    pub fn add(&self, other: &UeaElement) -> UeaElement {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::ONE);
        out
    }

    pub fn sub(&self, other: &UeaElement) -> UeaElement {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::from_int(-1));
        out
    }

    pub fn scale(&self, c: &Rational) -> UeaElement {
        let mut out = UeaElement::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn neg(&self) -> UeaElement {
        self.scale(&Rational::from_int(-1))
    }

    /// Left multiplication by a single word, i.e. `w · self`.
    pub fn left_mul_word(&self, w: &[Generator]) -> UeaElement {
        let state = self.terms.clone();
        UeaElement::from_terms(with_straightener(Mode::Full, |s| s.left_apply_word(w, state)))
    }

    /// PBW-normal product `self · other`. Large products are split over the
    /// rayon pool by left-hand monomial.
    pub fn mul(&self, other: &UeaElement) -> UeaElement {
        if self.is_zero() || other.is_zero() {
            return UeaElement::zero();
        }
        let left: Vec<(&PbwMonomial, &Rational)> = self.terms.iter().collect();
        let partial = |(m, c): &(&PbwMonomial, &Rational)| -> FxHashMap<PbwMonomial, Rational> {
            let state = other.terms.clone();
            let mut r = with_straightener(Mode::Full, |s| s.left_apply_word(&m.0, state));
            for v in r.values_mut() {
                *v *= *c;
            }
            r
        };
        let merge = |mut a: FxHashMap<PbwMonomial, Rational>, b: FxHashMap<PbwMonomial, Rational>| {
            for (m, c) in &b {
                accumulate(&mut a, m, c);
            }
            a
        };
        let acc = if left.len() * other.len() > 2048 {
            left.par_iter().map(partial).reduce(FxHashMap::default, merge)
        } else {
            left.iter().map(partial).fold(FxHashMap::default(), merge)
        };
        UeaElement::from_terms(acc)
    }

    pub fn pow(&self, k: u32) -> UeaElement {
        let mut acc = UeaElement::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Errors unless every generator is proper with indices in `1..=n`.
    pub fn check_in_gl(&self, n: usize) -> Result<(), UeaError> {
        for g in self.terms.keys().flat_map(|m| m.0.iter()) {
            if !g.is_proper() {
                return Err(UeaError::VirtualGenerator(*g));
            }
            if g.row().index as usize > n || g.col().index as usize > n {
                return Err(UeaError::IndexOutOfRange(*g, n));
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UeaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for UeaElement {
    /// `-e[2,1]e[1,2] + 3/2*e[1,1] - 2`; proper symbols print as indices.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.0.is_empty() {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "{m:?}")?;
        }
        Ok(())
    }
}

fn parse_word(s: &str) -> Result<Vec<Generator>, UeaError> {
    let perr = |m: &str| UeaError::Parse(format!("{m} in {s:?}"));
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix("e[").ok_or_else(|| perr("expected e["))?;
        let close = body.find(']').ok_or_else(|| perr("unclosed ["))?;
        let (a, b) = body[..close].split_once(',').ok_or_else(|| perr("expected a,b"))?;
        let a: Symbol = a.parse().map_err(|_| perr("bad row symbol"))?;
        let b: Symbol = b.parse().map_err(|_| perr("bad column symbol"))?;
        out.push(Generator::new(a, b));
        rest = body[close + 1..].trim_start();
    }
    Ok(out)
}

impl FromStr for UeaElement {
    type Err = UeaError;

    /// Parses the text form; words need not be in PBW order.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "0" {
            return Ok(UeaElement::zero());
        }
        let normalized = t.replace(" - ", " + -");
        let mut out = UeaElement::zero();
        for raw in normalized.split(" + ") {
            let term = raw.trim();
            let (neg, body) = match term.strip_prefix('-') {
                Some(b) => (true, b.trim_start()),
                None => (false, term),
            };
            let (coef, word) = if let Some(pos) = body.find('*') {
                let c: Rational = body[..pos].parse().map_err(|_| UeaError::Parse(format!("bad coefficient in {term:?}")))?;
                (c, parse_word(&body[pos + 1..])?)
            } else if body.starts_with("e[") {
                (Rational::ONE, parse_word(body)?)
            } else {
                let c: Rational = body.parse().map_err(|_| UeaError::Parse(format!("bad term {term:?}")))?;
                (c, Vec::new())
            };
            let coef = if neg { -coef } else { coef };
            out.add_scaled(&UeaElement::from_word(&word), &coef);
        }
        Ok(out)
    }
}

/// JSON mirror of the text form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UeaJson {
    pub terms: Vec<UeaJsonTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UeaJsonTerm {
    pub coeff: String,
    pub word: Vec<[String; 2]>,
}

impl UeaElement {
    pub fn to_json(&self) -> UeaJson {
        UeaJson {
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(m, c)| UeaJsonTerm {
                    coeff: c.to_fraction_string(),
                    word: m.0.iter().map(|g| [g.row().to_string(), g.col().to_string()]).collect(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &UeaJson) -> Result<UeaElement, UeaError> {
        let mut out = UeaElement::zero();
        for t in &j.terms {
            let c: Rational = t.coeff.parse().map_err(|_| UeaError::Parse(format!("bad coefficient {:?}", t.coeff)))?;
            let mut w = Vec::with_capacity(t.word.len());
            for [a, b] in &t.word {
                let a: Symbol = a.parse().map_err(|_| UeaError::Parse(format!("bad symbol {a:?}")))?;
                let b: Symbol = b.parse().map_err(|_| UeaError::Parse(format!("bad symbol {b:?}")))?;
                w.push(Generator::new(a, b));
            }
            out.add_scaled(&UeaElement::from_word(&w), &c);
        }
        Ok(out)
    }
}

/// Ring interface shared by enveloping-algebra elements and polynomials
/// over them, so column determinants can be taken over either.
pub trait NcRing: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
}

impl NcRing for UeaElement {
    fn zero() -> Self {
        UeaElement::zero()
    }
    fn one() -> Self {
        UeaElement::one()
    }
    fn add(&self, other: &Self) -> Self {
        UeaElement::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        UeaElement::mul(self, other)
    }
    fn scale(&self, c: &Rational) -> Self {
        UeaElement::scale(self, c)
    }
}

/// Square matrix with noncommutative entries.
#[derive(Debug, Clone)]
pub struct NcMatrix<R = UeaElement> {
    dim: usize,
    entries: Vec<R>,
}

impl<R: NcRing> NcMatrix<R> {
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self, UeaError> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(UeaError::NotSquare);
        }
        Ok(NcMatrix { dim, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        NcMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.dim + j]
    }

    /// Submatrix on the given (sorted) row and column index set.
    pub fn principal_minor(&self, idx: &[usize]) -> NcMatrix<R> {
        NcMatrix::from_fn(idx.len(), |i, j| self.get(idx[i], idx[j]).clone())
    }

    fn column_expansion(&self, signed: bool) -> R {
        let mut out = R::zero();
        for (perm, odd) in permutations_with_sign(self.dim) {
            let mut prod = R::one();
            for (col, &row) in perm.iter().enumerate() {
                prod = prod.mul(self.get(row, col));
            }
            let c = if signed && odd { Rational::from_int(-1) } else { Rational::ONE };
            out = out.add(&prod.scale(&c));
        }
        out
    }
}

/// Column determinant `Σ_σ (−1)^σ a_{σ(1),1} ⋯ a_{σ(k),k}`.
pub fn cdet<R: NcRing>(m: &NcMatrix<R>) -> R {
    m.column_expansion(true)
}

/// Column permanent `Σ_σ a_{σ(1),1} ⋯ a_{σ(k),k}`.
pub fn cper<R: NcRing>(m: &NcMatrix<R>) -> R {
    m.column_expansion(false)
}

/// `ad(g)(u) = [g, u]` for a proper (even) generator, expanded as a
/// derivation over each PBW word.
pub fn adjoint(g: Generator, u: &UeaElement) -> Result<UeaElement, UeaError> {
    if !g.is_proper() {
        return Err(UeaError::NonProperAdjoint(g));
    }
    let mut acc: FxHashMap<PbwMonomial, Rational> = FxHashMap::default();
    with_straightener(Mode::Full, |s| {
        for (m, c) in &u.terms {
            for (i, &h) in m.0.iter().enumerate() {
                for (k, kc) in super_commutator_terms(g, h) {
                    let mut w = Vec::with_capacity(m.0.len());
                    w.extend_from_slice(&m.0[..i]);
                    w.push(k);
                    w.extend_from_slice(&m.0[i + 1..]);
                    let coef = c * &kc;
                    for (m2, c2) in s.word(&w) {
                        accumulate(&mut acc, &m2, &(&coef * &c2));
                    }
                }
            }
        }
    });
    Ok(UeaElement::from_terms(acc))
}

/// True iff `ad(e_{ij})(u) = 0` for all `i, j ≤ n`.
pub fn is_central(u: &UeaElement, n: usize) -> Result<bool, UeaError> {
    u.check_in_gl(n)?;
    for i in 1..=n as u32 {
        for j in 1..=n as u32 {
            if !adjoint(Generator::proper(i, j), u)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Polynomial in a central indeterminate with enveloping-algebra
/// coefficients; `coeffs[k]` multiplies `t^k`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UeaPoly {
    coeffs: Vec<UeaElement>,
}

impl UeaPoly {
    pub fn constant(u: UeaElement) -> Self {
        let mut p = UeaPoly { coeffs: vec![u] };
        p.trim();
        p
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        UeaPoly { coeffs: vec![UeaElement::zero(), UeaElement::one()] }
    }

    pub fn from_coeffs(coeffs: Vec<UeaElement>) -> Self {
        let mut p = UeaPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> UeaElement {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[UeaElement] {
        &self.coeffs
    }

    /// Canonical text `(c_k)*t^k + … + (c_0)` in the named indeterminate,
    /// highest power first, zero coefficients omitted.
    pub fn to_text(&self, var: &str) -> String {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            parts.push(match k {
                0 => format!("({c})"),
                1 => format!("({c})*{var}"),
                _ => format!("({c})*{var}^{k}"),
            });
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }

    /// Substitutes a rational value for the indeterminate.
    pub fn eval(&self, t: &Rational) -> UeaElement {
        let mut acc = UeaElement::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.scale(t).add(c);
        }
        acc
    }
}

impl NcRing for UeaPoly {
    fn zero() -> Self {
        UeaPoly::default()
    }
    fn one() -> Self {
        UeaPoly::constant(UeaElement::one())
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        UeaPoly::from_coeffs((0..n).map(|k| self.coeff(k).add(&other.coeff(k))).collect())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return UeaPoly::default();
        }
        let mut out = vec![UeaElement::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                let p = a.mul(b);
                out[i + j].add_scaled(&p, &Rational::ONE);
            }
        }
        UeaPoly::from_coeffs(out)
    }
    fn scale(&self, c: &Rational) -> Self {
        UeaPoly::from_coeffs(self.coeffs.iter().map(|u| u.scale(c)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::Symbol;

    fn e(i: u32, j: u32) -> UeaElement {
        UeaElement::e(i, j)
    }
    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }
    const ALPHA: Symbol = Symbol { kind: crate::symbol::SymbolKind::VirtualEven, index: 1 };

    #[test]
    fn generator_packing() {
        let g = Generator::new(Symbol::proper(3), ALPHA);
        assert_eq!(g.row(), Symbol::proper(3));
        assert_eq!(g.col(), ALPHA);
        assert_eq!(g.class(), GeneratorClass::VirtualColumn);
        assert!(g.is_odd());
        assert!(!Generator::proper(1, 2).is_odd());
        assert!(Generator::proper(2, 1) < Generator::proper(1, 1));
        assert!(Generator::proper(1, 1) < Generator::proper(2, 2));
        assert!(Generator::proper(2, 2) < Generator::proper(1, 2));
        assert!(Generator::proper(1, 3) < Generator::new(ALPHA, Symbol::proper(1)));
        assert!(Generator::new(ALPHA, Symbol::proper(1)) < Generator::new(Symbol::proper(1), ALPHA));
    }

    #[test]
    fn commutator_examples() {
        assert_eq!(super_commutator(Generator::proper(1, 2), Generator::proper(2, 1)), e(1, 1).sub(&e(2, 2)));
        assert!(super_commutator(Generator::proper(1, 2), Generator::proper(3, 4)).is_zero());
        let up = Generator::new(Symbol::proper(1), ALPHA);
        let down = Generator::new(ALPHA, Symbol::proper(1));
        let expected = e(1, 1).add(&UeaElement::generator(Generator::new(ALPHA, ALPHA)));
        assert_eq!(super_commutator(up, down), expected);
    }

    #[test]
    fn multiplication_examples() {
        let u = e(1, 2).add(&e(2, 1).scale(&q(3)));
        assert_eq!(UeaElement::one().mul(&u), u);
        let prod = e(1, 2).mul(&e(2, 1));
        let expected = UeaElement::from_word(&[Generator::proper(2, 1), Generator::proper(1, 2)]).add(&e(1, 1)).sub(&e(2, 2));
        assert_eq!(prod, expected);
        assert_eq!(prod.len(), 3);
        let odd = UeaElement::generator(Generator::new(Symbol::proper(1), ALPHA));
        assert!(odd.mul(&odd).is_zero());
    }

    #[test]
    fn determinants_of_scalars() {
        let s = |v: i64| UeaElement::scalar(q(v));
        let m = NcMatrix::from_rows(vec![vec![s(1), s(2)], vec![s(3), s(4)]]).unwrap();
        assert_eq!(cdet(&m), s(-2));
        assert_eq!(cper(&m), s(10));
        let one = NcMatrix::from_rows(vec![vec![e(1, 2)]]).unwrap();
        assert_eq!(cdet(&one), e(1, 2));
        assert_eq!(cper(&one), e(1, 2));
        assert!(NcMatrix::from_rows(vec![vec![s(1), s(2)]]).is_err());
    }

    #[test]
    fn determinants_of_generators() {
        let m = NcMatrix::from_rows(vec![
            vec![e(1, 1).add(&UeaElement::one()), e(1, 2)],
            vec![e(2, 1), e(2, 2)],
        ])
        .unwrap();
        let expected = e(1, 1).add(&UeaElement::one()).mul(&e(2, 2)).sub(&e(2, 1).mul(&e(1, 2)));
        assert_eq!(cdet(&m), expected);
        let m = NcMatrix::from_rows(vec![
            vec![e(1, 1).sub(&UeaElement::one()), e(1, 2)],
            vec![e(2, 1), e(2, 2)],
        ])
        .unwrap();
        let expected = e(1, 1).sub(&UeaElement::one()).mul(&e(2, 2)).add(&e(2, 1).mul(&e(1, 2)));
        assert_eq!(cper(&m), expected);
    }

    #[test]
    fn adjoint_examples() {
        let g = Generator::proper(1, 2);
        let h = UeaElement::generator(Generator::new(Symbol::proper(2), ALPHA));
        assert_eq!(adjoint(g, &h).unwrap(), UeaElement::generator(Generator::new(Symbol::proper(1), ALPHA)));
        assert!(adjoint(g, &UeaElement::one()).unwrap().is_zero());
        assert!(adjoint(Generator::new(ALPHA, Symbol::proper(1)), &h).is_err());
        // ad(e_11) on the virtual Capelli monomial
        let n = 3;
        let mut w: Vec<Generator> = (1..=n).rev().map(|i| Generator::new(Symbol::proper(i), ALPHA)).collect();
        w.extend((1..=n).map(|i| Generator::new(ALPHA, Symbol::proper(i))));
        let m = UeaElement::from_word(&w);
        assert!(adjoint(Generator::proper(1, 1), &m).unwrap().is_zero());
    }

    #[test]
    fn centrality_examples() {
        assert!(is_central(&UeaElement::one(), 2).unwrap());
        assert!(!is_central(&e(1, 2), 2).unwrap());
        assert!(is_central(&e(1, 1).add(&e(2, 2)), 2).unwrap());
        let virt = UeaElement::generator(Generator::new(ALPHA, Symbol::proper(1)));
        assert!(matches!(is_central(&virt, 2), Err(UeaError::VirtualGenerator(_))));
    }

    #[test]
    fn text_forms() {
        let u = e(1, 2).mul(&e(2, 1)).scale(&q(-1)).add(&e(1, 1));
        assert_eq!(u.to_string(), "-e[2,1]e[1,2] + e[2,2]");
        let v = e(1, 1).scale(&Rational::new(3, 2)).sub(&UeaElement::scalar(q(2)));
        assert_eq!(v.to_string(), "3/2*e[1,1] - 2");
        assert_eq!(v.to_string().parse::<UeaElement>().unwrap(), v);
        assert_eq!("-e[1,2]e[2,1] + e[1,1]".parse::<UeaElement>().unwrap(), u);
        assert_eq!(UeaElement::from_json(&u.to_json()).unwrap(), u);
        assert_eq!(UeaElement::zero().to_string(), "0");
    }

    #[test]
    fn polynomial_coefficients() {
        let t = UeaPoly::var();
        let p = NcRing::add(&t, &UeaPoly::constant(e(1, 1)));
        let sq = NcRing::mul(&p, &p);
        assert_eq!(sq.degree(), Some(2));
        assert_eq!(sq.coeff(1), e(1, 1).scale(&q(2)));
        assert_eq!(sq.eval(&q(1)), e(1, 1).add(&UeaElement::one()).pow(2));
    }
}
