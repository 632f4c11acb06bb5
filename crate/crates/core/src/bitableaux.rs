//! Young tableaux, Capelli bitableaux in U(gl(n)), bideterminants and
//! bipermanents in ℂ[(x_i|x_j)], and the Koszul map between the two sides.

use std::fmt;

use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::exact::{binomial, Rational};
use crate::poly::{lp, GlPolynomial};
use crate::superpoly::permutations_with_sign;
use crate::symbol::{Symbol, SymbolKind};
use crate::uea::{Generator, PbwMonomial, UeaElement};
use crate::virt::{capelli_pi, BalancedMonomial, VirtError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BitabError {
    #[error("invalid shape {0:?}: parts must be positive and weakly decreasing")]
    InvalidShape(Vec<usize>),
    #[error("tableaux have different shapes {0:?} and {1:?}")]
    ShapeMismatch(Vec<usize>, Vec<usize>),
    #[error("entry {entry} outside the alphabet 1..={n}")]
    EntryOutOfRange { entry: u32, n: u32 },
    #[error("generator {0} is not in gl(n)")]
    VirtualGenerator(Generator),
    #[error("cannot parse tableau: {0}")]
    Parse(String),
    #[error(transparent)]
    Virt(#[from] VirtError),
}

/// Whether a bitableau uses even (determinantal) or odd (permanental)
/// virtual row symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BitabKind {
    Det,
    Per,
}

impl BitabKind {
    fn symbol_kind(self) -> SymbolKind {
        match self {
            BitabKind::Det => SymbolKind::VirtualEven,
            BitabKind::Per => SymbolKind::VirtualOdd,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungShape(Vec<usize>);

impl YoungShape {
    pub fn new(parts: Vec<usize>) -> Result<Self, BitabError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(BitabError::InvalidShape(parts));
        }
        Ok(YoungShape(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn cells(&self) -> usize {
        self.0.iter().sum()
    }

    /// All partitions of `cells`, largest first part first.
    pub fn partitions(cells: usize) -> Vec<YoungShape> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<YoungShape>) {
            if rest == 0 {
                out.push(YoungShape(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(cells, cells, &mut Vec::new(), &mut out);
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct YoungTableau {
    rows: Vec<Vec<u32>>,
}

impl YoungTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self, BitabError> {
        YoungShape::new(rows.iter().map(Vec::len).collect())?;
        if rows.iter().flatten().any(|&e| e == 0) {
            return Err(BitabError::EntryOutOfRange { entry: 0, n: 0 });
        }
        Ok(YoungTableau { rows })
    }

    /// A single row tableau.
    pub fn row(entries: &[u32]) -> Result<Self, BitabError> {
        Self::new(vec![entries.to_vec()])
    }

    /// Parses the JSON form `[[1,2],[3]]`.
    pub fn from_json(s: &str) -> Result<Self, BitabError> {
        let rows: Vec<Vec<u32>> = serde_json::from_str(s).map_err(|e| BitabError::Parse(e.to_string()))?;
        Self::new(rows)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.rows).expect("rows serialize")
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> YoungShape {
        YoungShape(self.rows.iter().map(Vec::len).collect())
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Rows strictly increasing, columns weakly increasing.
    pub fn is_semistandard(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1])) && self.columns_ok(|a, b| a <= b)
    }

    /// Rows weakly increasing, columns strictly increasing.
    pub fn is_cosemistandard(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1])) && self.columns_ok(|a, b| a < b)
    }

    fn columns_ok(&self, ok: impl Fn(u32, u32) -> bool) -> bool {
        self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(&below, &above)| ok(above, below)))
    }

    /// Every filling of `shape` over `1..=n`.
    pub fn all_fillings(shape: &YoungShape, n: u32) -> Vec<YoungTableau> {
        let cells = shape.cells();
        let total = (n as usize).pow(cells as u32);
        let mut out = Vec::with_capacity(total);
        let mut digits = vec![1u32; cells];
        for _ in 0..total {
            let mut rows = Vec::with_capacity(shape.0.len());
            let mut k = 0;
            for &len in &shape.0 {
                rows.push(digits[k..k + len].to_vec());
                k += len;
            }
            out.push(YoungTableau { rows });
            for d in digits.iter_mut().rev() {
                if *d < n {
                    *d += 1;
                    break;
                }
                *d = 1;
            }
        }
        out
    }
}

impl fmt::Display for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiTableau {
    s: YoungTableau,
    t: YoungTableau,
}

impl BiTableau {
    pub fn new(s: YoungTableau, t: YoungTableau) -> Result<Self, BitabError> {
        let (a, b) = (s.shape(), t.shape());
        if a != b {
            return Err(BitabError::ShapeMismatch(a.0, b.0));
        }
        Ok(BiTableau { s, t })
    }

    pub fn from_rows(s: Vec<Vec<u32>>, t: Vec<Vec<u32>>) -> Result<Self, BitabError> {
        Self::new(YoungTableau::new(s)?, YoungTableau::new(t)?)
    }

    pub fn s(&self) -> &YoungTableau {
        &self.s
    }

    pub fn t(&self) -> &YoungTableau {
        &self.t
    }

    pub fn shape(&self) -> YoungShape {
        self.s.shape()
    }

    pub fn check_alphabet(&self, n: u32) -> Result<(), BitabError> {
        let m = self.s.max_entry().max(self.t.max_entry());
        if m > n {
            return Err(BitabError::EntryOutOfRange { entry: m, n });
        }
        Ok(())
    }

    /// `e_{S,γ} · e_{γ,T}` with one fresh virtual symbol per row.
    pub fn virtual_presentation(&self, kind: BitabKind) -> BalancedMonomial {
        let sk = kind.symbol_kind();
        let gamma = |r: usize| Symbol { kind: sk, index: r as u32 + 1 };
        let mut creations = Vec::new();
        let mut annihilations = Vec::new();
        for (r, (srow, trow)) in self.s.rows.iter().zip(&self.t.rows).enumerate() {
            for &i in srow {
                creations.push(Generator::new(Symbol::proper(i), gamma(r)));
            }
            for &j in trow {
                annihilations.push(Generator::new(gamma(r), Symbol::proper(j)));
            }
        }
        BalancedMonomial::new(creations, annihilations).expect("rows have equal lengths")
    }
}

impl fmt::Display for BiTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} | {}]", self.s, self.t)
    }
}

fn capelli_bitableau(bt: &BiTableau, n: u32, kind: BitabKind) -> Result<UeaElement, BitabError> {
    bt.check_alphabet(n)?;
    Ok(capelli_pi(&bt.virtual_presentation(kind))?)
}

/// Determinantal Capelli bitableau `[S|T]`.
pub fn capelli_det_bitableau(bt: &BiTableau, n: u32) -> Result<UeaElement, BitabError> {
    capelli_bitableau(bt, n, BitabKind::Det)
}

/// Permanental Capelli bitableau `[S|T]*`.
pub fn capelli_per_bitableau(bt: &BiTableau, n: u32) -> Result<UeaElement, BitabError> {
    capelli_bitableau(bt, n, BitabKind::Per)
}

pub fn capelli_bitableau_of_kind(bt: &BiTableau, n: u32, kind: BitabKind) -> Result<UeaElement, BitabError> {
    capelli_bitableau(bt, n, kind)
}

fn row_matrix(srow: &[u32], trow: &[u32]) -> Vec<Vec<GlPolynomial>> {
    let k = srow.len();
    (0..k).map(|u| (0..k).map(|v| lp(srow[k - 1 - u], trow[v])).collect()).collect()
}

fn row_expansion(m: &[Vec<GlPolynomial>], signed: bool) -> GlPolynomial {
    let mut out = GlPolynomial::zero();
    for (perm, odd) in permutations_with_sign(m.len()) {
        let prod = GlPolynomial::product(perm.iter().enumerate().map(|(col, &row)| &m[row][col]));
        let sign = if signed && odd { Rational::from_int(-1) } else { Rational::ONE };
        out.add_scaled(&prod, &sign);
    }
    out
}

/// `θ = (−1)^{Σ_{i<j} λ_i λ_j}`.
pub fn shape_sign(shape: &YoungShape) -> Rational {
    let p = shape.parts();
    let mut e = 0usize;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            e += p[i] * p[j];
        }
    }
    Rational::sign(e)
}

/// Signed bideterminant `(S|T)`: θ times the product of the row
/// determinants `det[(x_{S reversed}|x_T)]`.
pub fn bideterminant(bt: &BiTableau) -> GlPolynomial {
    let mut out = GlPolynomial::constant(shape_sign(&bt.shape()));
    for (srow, trow) in bt.s.rows.iter().zip(&bt.t.rows) {
        out = out.mul(&row_expansion(&row_matrix(srow, trow), true));
    }
    out
}

/// Product of the row permanents `per[(x_S|x_T)]`, no sign.
pub fn bipermanent_rows(bt: &BiTableau) -> GlPolynomial {
    let mut out = GlPolynomial::one();
    for (srow, trow) in bt.s.rows.iter().zip(&bt.t.rows) {
        out = out.mul(&row_expansion(&row_matrix(srow, trow), false));
    }
    out
}

/// Bipermanent `(S|T)*`, defined as the Koszul image of `[S|T]*`.
pub fn bipermanent(bt: &BiTableau) -> Result<GlPolynomial, BitabError> {
    let n = bt.s.max_entry().max(bt.t.max_entry());
    koszul_map(&capelli_per_bitableau(bt, n)?)
}

/// `D_{h,k} M + (x_h|x_k) M`, with `D_{h,k} = Σ_j (x_h|x_j) ∂/∂(x_k|x_j)`.
pub fn rho(h: u32, k: u32, m: &GlPolynomial) -> GlPolynomial {
    let mut out = lp(h, k).mul(m);
    for v in m.variables() {
        if v.0 == k {
            out = out.add(&lp(h, v.1).mul(&m.partial(&v)));
        }
    }
    out
}

/// The Koszul map: evaluation at 1 of `e_{h,k} ↦ ρ_{h,k}`.
pub fn koszul_map(u: &UeaElement) -> Result<GlPolynomial, BitabError> {
    if let Some(g) = u.first_virtual_generator() {
        return Err(BitabError::VirtualGenerator(g));
    }
    let mut memo: FxHashMap<Vec<Generator>, GlPolynomial> = FxHashMap::default();
    let mut out = GlPolynomial::zero();
    for (m, c) in u.terms() {
        out.add_scaled(&koszul_word(m.generators(), &mut memo), c);
    }
    Ok(out)
}

fn koszul_word(w: &[Generator], memo: &mut FxHashMap<Vec<Generator>, GlPolynomial>) -> GlPolynomial {
    if w.is_empty() {
        return GlPolynomial::one();
    }
    if let Some(p) = memo.get(w) {
        return p.clone();
    }
    let inner = koszul_word(&w[1..], memo);
    let p = rho(w[0].row().index, w[0].col().index, &inner);
    memo.insert(w.to_vec(), p.clone());
    p
}

/// `𝔎([S|T]) = (S|T)`.
pub fn verify_correspondence(bt: &BiTableau) -> bool {
    let n = bt.s.max_entry().max(bt.t.max_entry());
    match capelli_det_bitableau(bt, n).and_then(|u| koszul_map(&u)) {
        Ok(p) => p == bideterminant(bt),
        Err(_) => false,
    }
}

/// `𝔎([S|T]*)` against the row-permanent product.
pub fn verify_permanental_correspondence(bt: &BiTableau) -> bool {
    match bipermanent(bt) {
        Ok(p) => p == bipermanent_rows(bt),
        Err(_) => false,
    }
}

/// Which tableau condition a basis family uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Standardness {
    Semistandard,
    CoSemistandard,
}

impl Standardness {
    pub fn for_kind(kind: BitabKind) -> Self {
        match kind {
            BitabKind::Det => Standardness::Semistandard,
            BitabKind::Per => Standardness::CoSemistandard,
        }
    }

    fn accepts(self, t: &YoungTableau) -> bool {
        match self {
            Standardness::Semistandard => t.is_semistandard(),
            Standardness::CoSemistandard => t.is_cosemistandard(),
        }
    }
}

/// All pairs `(S, T)` of the same shape with `cells` boxes over `1..=n`,
/// both tableaux satisfying the chosen condition.
pub fn semistandard_pairs(n: u32, cells: usize, which: Standardness) -> Vec<BiTableau> {
    let mut out = Vec::new();
    for shape in YoungShape::partitions(cells) {
        let tabs: Vec<YoungTableau> =
            YoungTableau::all_fillings(&shape, n).into_iter().filter(|t| which.accepts(t)).collect();
        for s in &tabs {
            for t in &tabs {
                out.push(BiTableau { s: s.clone(), t: t.clone() });
            }
        }
    }
    out
}

/// Exact rank of a rational matrix by Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = &row[c] * &inv;
            for (x, y) in row.iter_mut().zip(&pivot).skip(c) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Outcome of a basis check, one entry per degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisReport {
    /// `(degree, family size, dimension of the degree part of Sym[gl(n)])`
    pub counts: Vec<(usize, usize, usize)>,
    pub rank: usize,
    pub total: usize,
}

impl BasisReport {
    pub fn passes(&self) -> bool {
        self.rank == self.total && self.counts.iter().all(|&(_, a, b)| a == b)
    }
}

/// Builds the semistandard (det) or co-semistandard (per) Capelli bitableau
/// family with at most `max_cells` boxes and checks linear independence over
/// PBW coordinates plus the per-degree counts.
pub fn basis_report(n: u32, max_cells: usize, kind: BitabKind) -> Result<BasisReport, BitabError> {
    let which = Standardness::for_kind(kind);
    let vars = (n * n) as i64;
    let mut family = Vec::new();
    let mut counts = Vec::new();
    for k in 0..=max_cells {
        let pairs = semistandard_pairs(n, k, which);
        let dim = binomial(k as i64 + vars - 1, k as i64);
        counts.push((k, pairs.len(), dim.numer().try_into().expect("small dimension")));
        family.extend(pairs);
    }
    let elements: Vec<UeaElement> = family
        .par_iter()
        .map(|bt| capelli_bitableau(bt, n, kind))
        .collect::<Result<_, _>>()?;
    let mut index: FxHashMap<PbwMonomial, usize> = FxHashMap::default();
    for u in &elements {
        for (m, _) in u.sorted_terms() {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
    }
    let rows: Vec<Vec<Rational>> = elements
        .iter()
        .map(|u| {
            let mut row = vec![Rational::ZERO; index.len()];
            for (m, c) in u.terms() {
                row[index[m]] = c.clone();
            }
            row
        })
        .collect();
    Ok(BasisReport { counts, rank: rank(rows), total: family.len() })
}

pub fn verify_basis(n: u32, max_cells: usize, kind: BitabKind) -> bool {
    basis_report(n, max_cells, kind).map(|r| r.passes()).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uea::{cdet, cper, NcMatrix};

    fn bt(s: Vec<Vec<u32>>, t: Vec<Vec<u32>>) -> BiTableau {
        BiTableau::from_rows(s, t).unwrap()
    }

    fn e(i: u32, j: u32) -> UeaElement {
        UeaElement::e(i, j)
    }

    fn shifted(idx: &[u32], shifts: &[i64]) -> NcMatrix {
        NcMatrix::from_fn(idx.len(), |a, b| {
            let mut x = e(idx[a], idx[b]);
            if a == b {
                x = x.add(&UeaElement::scalar(Rational::from_int(shifts[a])));
            }
            x
        })
    }

    #[test]
    fn shapes_and_fillings() {
        assert!(YoungShape::new(vec![1, 2]).is_err());
        assert_eq!(YoungShape::partitions(4).len(), 5);
        assert_eq!(YoungTableau::all_fillings(&YoungShape::new(vec![2, 1]).unwrap(), 2).len(), 8);
        assert!(BiTableau::from_rows(vec![vec![1, 2]], vec![vec![1], vec![2]]).is_err());
        let t = YoungTableau::from_json("[[1,2],[3]]").unwrap();
        assert_eq!(t.to_json(), "[[1,2],[3]]");
    }

    #[test]
    fn determinantal_examples() {
        assert_eq!(capelli_det_bitableau(&bt(vec![vec![1]], vec![vec![1]]), 1).unwrap(), e(1, 1));
        let row = capelli_det_bitableau(&bt(vec![vec![2, 1]], vec![vec![1, 2]]), 2).unwrap();
        assert_eq!(row, cdet(&shifted(&[1, 2], &[1, 0])));
        let col = capelli_det_bitableau(&bt(vec![vec![1], vec![2]], vec![vec![2], vec![1]]), 2).unwrap();
        assert_eq!(col.to_string(), "-e[2,1]e[1,2] + e[2,2]");
        assert_eq!(col, e(1, 2).mul(&e(2, 1)).neg().add(&e(1, 1)));
    }

    #[test]
    fn row_symmetries() {
        let a = capelli_det_bitableau(&bt(vec![vec![1, 2]], vec![vec![1, 2]]), 2).unwrap();
        let b = capelli_det_bitableau(&bt(vec![vec![2, 1]], vec![vec![1, 2]]), 2).unwrap();
        assert_eq!(a, b.neg());
        assert!(capelli_det_bitableau(&bt(vec![vec![1, 1]], vec![vec![1, 2]]), 2).unwrap().is_zero());
        let p = capelli_per_bitableau(&bt(vec![vec![1, 2]], vec![vec![1, 2]]), 2).unwrap();
        let q = capelli_per_bitableau(&bt(vec![vec![2, 1]], vec![vec![1, 2]]), 2).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn permanental_examples() {
        assert_eq!(capelli_per_bitableau(&bt(vec![vec![1]], vec![vec![1]]), 1).unwrap(), e(1, 1));
        let p = capelli_per_bitableau(&bt(vec![vec![3, 2, 1]], vec![vec![1, 2, 3]]), 3).unwrap();
        assert_eq!(p, cper(&shifted(&[1, 2, 3], &[-2, -1, 0])));
    }

    #[test]
    fn bideterminant_examples() {
        assert_eq!(bideterminant(&bt(vec![vec![1]], vec![vec![1]])), lp(1, 1));
        let det2 = lp(1, 1).mul(&lp(2, 2)).sub(&lp(1, 2).mul(&lp(2, 1)));
        assert_eq!(bideterminant(&bt(vec![vec![2, 1]], vec![vec![1, 2]])), det2);
        assert_eq!(
            bideterminant(&bt(vec![vec![1], vec![2]], vec![vec![2], vec![1]])),
            lp(1, 2).mul(&lp(2, 1)).neg()
        );
    }

    #[test]
    fn koszul_examples() {
        assert_eq!(koszul_map(&UeaElement::one()).unwrap(), GlPolynomial::one());
        assert_eq!(koszul_map(&e(2, 1)).unwrap(), lp(2, 1));
        for n in 1..=3u32 {
            let s: Vec<u32> = (1..=n).rev().collect();
            let t: Vec<u32> = (1..=n).collect();
            let b = bt(vec![s], vec![t]);
            let k = koszul_map(&capelli_det_bitableau(&b, n).unwrap()).unwrap();
            let m: Vec<Vec<GlPolynomial>> = (1..=n).map(|i| (1..=n).map(|j| lp(i, j)).collect()).collect();
            assert_eq!(k, row_expansion(&m, true));
        }
    }

    #[test]
    fn correspondence_examples() {
        assert!(verify_correspondence(&bt(vec![vec![1]], vec![vec![1]])));
        assert!(verify_correspondence(&bt(vec![vec![1], vec![2]], vec![vec![2], vec![1]])));
        assert!(verify_correspondence(&bt(vec![vec![2, 1]], vec![vec![1, 2]])));
        let b = bt(vec![vec![1, 1]], vec![vec![1, 1]]);
        assert_eq!(bipermanent(&b).unwrap(), lp(1, 1).pow(2).scale(&Rational::from_int(2)));
        assert!(verify_permanental_correspondence(&b));
    }

    #[test]
    fn pair_counts() {
        assert_eq!(semistandard_pairs(1, 1, Standardness::Semistandard).len(), 1);
        assert_eq!(semistandard_pairs(2, 1, Standardness::Semistandard).len(), 4);
        assert_eq!(semistandard_pairs(2, 2, Standardness::Semistandard).len(), 10);
        assert_eq!(semistandard_pairs(2, 2, Standardness::CoSemistandard).len(), 10);
        assert_eq!(semistandard_pairs(2, 3, Standardness::CoSemistandard).len(), 20);
    }

    #[test]
    fn exact_rank() {
        let r = |v: &[i64]| v.iter().map(|&x| Rational::from_int(x)).collect::<Vec<_>>();
        assert_eq!(rank(vec![r(&[1, 2]), r(&[2, 4])]), 1);
        assert_eq!(rank(vec![r(&[1, 2, 0]), r(&[0, 1, 1]), r(&[1, 3, 1])]), 2);
    }

    #[test]
    fn small_bases() {
        assert!(verify_basis(1, 3, BitabKind::Det));
        assert!(verify_basis(1, 3, BitabKind::Per));
        assert!(verify_basis(2, 2, BitabKind::Det));
        assert!(verify_basis(2, 2, BitabKind::Per));
    }
}
