//! Central elements of U(gl(n)) and the Harish-Chandra map to shifted
//! symmetric polynomials.

use rand::Rng;

use crate::bitableaux::{capelli_det_bitableau, capelli_per_bitableau, BiTableau, BitabError};
use crate::exact::{binomial, factorial, Rational};
use crate::poly::{x, SymPolynomial, X};
use crate::superpoly::{permutations_with_sign, SuperPolynomial, SuperVariable};
use crate::uea::{cdet, is_central, GeneratorClass, NcMatrix, NcRing, UeaElement, UeaError, UeaPoly};
use crate::virt::act;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CenterError {
    #[error("{what} = {value} is out of range (must be at most {max})")]
    IndexOutOfRange { what: &'static str, value: usize, max: usize },
    #[error("element is not central in U(gl({0}))")]
    NotCentral(usize),
    #[error("invalid weight {0:?}: entries must be weakly decreasing")]
    InvalidWeight(Vec<u32>),
    #[error("highest weight vector is not an eigenvector of the element")]
    NotEigenvector,
    #[error(transparent)]
    Bitab(#[from] BitabError),
    #[error(transparent)]
    Uea(#[from] UeaError),
}

fn scalar(c: i64) -> UeaElement {
    UeaElement::scalar(Rational::from_int(c))
}

fn subsets(n: u32, k: usize) -> Vec<Vec<u32>> {
    fn rec(start: u32, n: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// Weak compositions of `r` into `n` parts.
fn compositions(r: u32, n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return if r == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=r {
        for mut rest in compositions(r - first, n - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `[i_k ⋯ i_1 | i_1 ⋯ i_k]` for an increasing index list.
fn capelli_row(idx: &[u32], n: u32) -> Result<UeaElement, CenterError> {
    let s: Vec<u32> = idx.iter().rev().copied().collect();
    Ok(capelli_det_bitableau(&BiTableau::from_rows(vec![s], vec![idx.to_vec()])?, n)?)
}

/// Capelli generator `H_n^{(k)}`, the sum of one-row bitableaux over
/// increasing index sets of size `k`; `H_n^{(0)} = 1`.
pub fn capelli_generator(n: u32, k: u32) -> Result<UeaElement, CenterError> {
    if k > n {
        return Err(CenterError::IndexOutOfRange { what: "k", value: k as usize, max: n as usize });
    }
    if k == 0 {
        return Ok(UeaElement::one());
    }
    let mut out = UeaElement::zero();
    for idx in subsets(n, k as usize) {
        out = out.add(&capelli_row(&idx, n)?);
    }
    Ok(out)
}

/// `H_n^{(k)}` as a sum of column determinants with shifts `k−1, …, 0`.
pub fn capelli_generator_cdet(n: u32, k: u32) -> Result<UeaElement, CenterError> {
    if k > n {
        return Err(CenterError::IndexOutOfRange { what: "k", value: k as usize, max: n as usize });
    }
    if k == 0 {
        return Ok(UeaElement::one());
    }
    let mut out = UeaElement::zero();
    for idx in subsets(n, k as usize) {
        let m = NcMatrix::from_fn(idx.len(), |a, b| {
            let e = UeaElement::e(idx[a], idx[b]);
            if a == b {
                e.add(&scalar(k as i64 - 1 - a as i64))
            } else {
                e
            }
        });
        out = out.add(&cdet(&m));
    }
    Ok(out)
}

fn all_capelli_generators(n: u32) -> Result<Vec<UeaElement>, CenterError> {
    (0..=n).map(|j| capelli_generator(n, j)).collect()
}

/// Rectangular Capelli/Deruyts bitableau `K_n^p` with `p` rows
/// `(n ⋯ 1 | 1 ⋯ n)`; `K_n^0 = 1`.
pub fn deruyts(n: u32, p: u32) -> Result<UeaElement, CenterError> {
    if p == 0 {
        return Ok(UeaElement::one());
    }
    let s: Vec<u32> = (1..=n).rev().collect();
    let t: Vec<u32> = (1..=n).collect();
    let bt = BiTableau::from_rows(vec![s; p as usize], vec![t; p as usize])?;
    Ok(capelli_det_bitableau(&bt, n)?)
}

/// Signed Stirling number of the first kind `s(n, k)`.
pub fn stirling_first(n: u32, k: u32) -> Rational {
    let mut row = vec![Rational::ONE];
    for m in 0..n {
        let mut next = vec![Rational::ZERO; row.len() + 1];
        for (j, c) in row.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= &(c * &Rational::from_int(m as i64));
        }
        row = next;
    }
    row.get(k as usize).cloned().unwrap_or(Rational::ZERO)
}

/// `(p)_k = p (p − 1) ⋯ (p − k + 1)`.
pub fn falling_factorial(p: &Rational, k: u32) -> Rational {
    let mut acc = Rational::ONE;
    for i in 0..k {
        acc *= &(p - &Rational::from_int(i as i64));
    }
    acc
}

/// `(t)_k` as a polynomial in the indeterminate, coefficients `s(k, m)`.
pub fn falling_factorial_poly(k: u32) -> UeaPoly {
    UeaPoly::from_coeffs((0..=k).map(|m| UeaElement::scalar(stirling_first(k, m))).collect())
}

/// `C_n(p) = Σ_j (−1)^{n−j} (p)_{n−j} H_n^{(j)}`.
pub fn c_n(n: u32, p: u32) -> Result<UeaElement, CenterError> {
    let h = all_capelli_generators(n)?;
    let p = Rational::from_int(p as i64);
    let mut out = UeaElement::zero();
    for (j, hj) in h.iter().enumerate() {
        let c = Rational::sign(n as usize - j) * falling_factorial(&p, n - j as u32);
        out.add_scaled(hj, &c);
    }
    Ok(out)
}

/// Both sides of `K_n^{p+1} = (−1)^{np} K_n^p C_n(p)`.
pub fn expansion_sides(n: u32, p: u32) -> Result<(UeaElement, UeaElement), CenterError> {
    let lhs = deruyts(n, p + 1)?;
    let rhs = deruyts(n, p)?.mul(&c_n(n, p)?).scale(&Rational::sign((n * p) as usize));
    Ok((lhs, rhs))
}

pub fn verify_expansion(n: u32, p: u32) -> bool {
    matches!(expansion_sides(n, p), Ok((a, b)) if a == b)
}

fn diag_shifted<R: NcRing>(n: u32, entry: impl Fn(u32, u32) -> R, shift: impl Fn(u32) -> R) -> NcMatrix<R> {
    NcMatrix::from_fn(n as usize, |a, b| {
        let (i, j) = (a as u32 + 1, b as u32 + 1);
        let e = entry(i, j);
        if i == j {
            e.add(&shift(i))
        } else {
            e
        }
    })
}

/// `H_n(p) = cdet[e_{ij} + δ_{ij}(−p + n − i)]` at a rational value.
pub fn h_n_value(n: u32, p: &Rational) -> UeaElement {
    let m = diag_shifted(n, UeaElement::e, |i| {
        UeaElement::scalar(&Rational::from_int(n as i64 - i as i64) - p)
    });
    cdet(&m)
}

/// `H_n(t)` with a formal indeterminate `t`.
pub fn h_n_t(n: u32) -> UeaPoly {
    let m = diag_shifted(
        n,
        |i, j| UeaPoly::constant(UeaElement::e(i, j)),
        |i| UeaPoly::from_coeffs(vec![scalar(n as i64 - i as i64), scalar(-1)]),
    );
    cdet(&m)
}

/// `Σ_j (−1)^{n−j} (t)_{n−j} H_n^{(j)}` as a polynomial in `t`.
pub fn h_n_t_expansion(n: u32) -> Result<UeaPoly, CenterError> {
    let h = all_capelli_generators(n)?;
    let mut out = UeaPoly::zero();
    for (j, hj) in h.iter().enumerate() {
        let k = n - j as u32;
        let term = falling_factorial_poly(k).mul(&UeaPoly::constant(hj.clone()));
        out = out.add(&term.scale(&Rational::sign(k as usize)));
    }
    Ok(out)
}

/// `𝒞_n(s) = cdet[e_{ij} + δ_{ij}(s − i + 1)]` as a polynomial in `s`.
pub fn capelli_determinant_c(n: u32) -> UeaPoly {
    let m = diag_shifted(
        n,
        |i, j| UeaPoly::constant(UeaElement::e(i, j)),
        |i| UeaPoly::from_coeffs(vec![scalar(1 - i as i64), scalar(1)]),
    );
    cdet(&m)
}

/// `p(a s + b)` for a polynomial `p` in one central indeterminate.
pub fn compose_linear(p: &UeaPoly, a: &Rational, b: &Rational) -> UeaPoly {
    let lin = UeaPoly::from_coeffs(vec![UeaElement::scalar(b.clone()), UeaElement::scalar(a.clone())]);
    let mut acc = UeaPoly::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(&lin).add(&UeaPoly::constant(c.clone()));
    }
    acc
}

/// `𝒞_n^{(h)}`, the coefficient of `s^{n−h}` in `𝒞_n(s)`.
pub fn c_coefficient(n: u32, h: u32) -> Result<UeaElement, CenterError> {
    if h > n {
        return Err(CenterError::IndexOutOfRange { what: "h", value: h as usize, max: n as usize });
    }
    Ok(capelli_determinant_c(n).coeff((n - h) as usize))
}

/// `𝒞_n^{(h)}` as the sum of the principal `h × h` column-determinant
/// minors of `𝒞_n(0)`.
pub fn c_coefficient_minor_sum(n: u32, h: u32) -> Result<UeaElement, CenterError> {
    if h > n {
        return Err(CenterError::IndexOutOfRange { what: "h", value: h as usize, max: n as usize });
    }
    if h == 0 {
        return Ok(UeaElement::one());
    }
    let c0 = diag_shifted(n, UeaElement::e, |i| scalar(1 - i as i64));
    let mut out = UeaElement::zero();
    for idx in subsets(n, h as usize) {
        let idx: Vec<usize> = idx.iter().map(|&i| i as usize - 1).collect();
        out = out.add(&cdet(&c0.principal_minor(&idx)));
    }
    Ok(out)
}

/// `c(n − h, j) = Σ_{p=0}^{n−j} C(n−1, j+p−1) s(p, h) / p!`.
pub fn stirling_coefficient(n: u32, h: u32, j: u32) -> Rational {
    let mut acc = Rational::ZERO;
    for p in 0..=(n - j) {
        let b = binomial(n as i64 - 1, j as i64 + p as i64 - 1);
        acc += &(b * stirling_first(p, h) * factorial(p).recip());
    }
    acc
}

/// Right side `(−1)^h Σ_j c(n−h, j) (n−j)! H_n^{(j)}` of the Stirling
/// relation for `𝒞_n^{(n−h)}`. With `alternating` each summand also carries
/// `(−1)^{n−j}`.
pub fn stirling_rhs(n: u32, h: u32, alternating: bool) -> Result<UeaElement, CenterError> {
    let gens = all_capelli_generators(n)?;
    let mut out = UeaElement::zero();
    for (j, hj) in gens.iter().enumerate() {
        let j = j as u32;
        let mut c = stirling_coefficient(n, h, j) * factorial(n - j);
        if alternating {
            c *= &Rational::sign((n - j) as usize);
        }
        out.add_scaled(hj, &c);
    }
    Ok(out.scale(&Rational::sign(h as usize)))
}

/// The Stirling relation in the form `𝒞_n^{(n−h)} = (−1)^h Σ_j c(n−h, j) (n−j)! H_n^{(j)}`.
pub fn stirling_relation(n: u32, h: u32) -> bool {
    stirling_relation_with(n, h, false)
}

/// Same relation with the alternating factor `(−1)^{n−j}` in each summand.
pub fn stirling_relation_alternating(n: u32, h: u32) -> bool {
    stirling_relation_with(n, h, true)
}

fn stirling_relation_with(n: u32, h: u32, alternating: bool) -> bool {
    if h >= n {
        return false;
    }
    match (c_coefficient(n, n - h), stirling_rhs(n, h, alternating)) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    }
}

/// Permanental generator `𝒫_n^{(r)} = Σ (i_1!⋯i_n!)^{−1} [n^{i_n}⋯1^{i_1} | 1^{i_1}⋯n^{i_n}]*`.
pub fn permanental_generator(n: u32, r: u32) -> Result<UeaElement, CenterError> {
    if r == 0 {
        return Ok(UeaElement::one());
    }
    let mut out = UeaElement::zero();
    for comp in compositions(r, n as usize) {
        let mut t = Vec::new();
        let mut weight = Rational::ONE;
        for (i, &m) in comp.iter().enumerate() {
            t.extend(std::iter::repeat_n(i as u32 + 1, m as usize));
            weight *= &factorial(m);
        }
        let s: Vec<u32> = t.iter().rev().copied().collect();
        let b = capelli_per_bitableau(&BiTableau::from_rows(vec![s], vec![t])?, n)?;
        out.add_scaled(&b, &weight.recip());
    }
    Ok(out)
}

/// Keeps the Cartan-only PBW monomials of `u` and maps `e_{ii} ↦ x_i`.
pub fn cartan_projection(u: &UeaElement) -> SymPolynomial {
    let mut out = SymPolynomial::zero();
    for (m, c) in u.terms() {
        if m.generators().iter().all(|g| g.class() == GeneratorClass::Cartan) {
            let mut mono: Vec<(X, u32)> = Vec::new();
            for g in m.generators() {
                let v = X(g.row().index);
                match mono.last_mut() {
                    Some((w, e)) if *w == v => *e += 1,
                    _ => mono.push((v, 1)),
                }
            }
            out.add_term(mono, c);
        }
    }
    out
}

/// Harish-Chandra image of a central element.
pub fn harish_chandra(u: &UeaElement, n: u32) -> Result<SymPolynomial, CenterError> {
    if !is_central(u, n as usize)? {
        return Err(CenterError::NotCentral(n as usize));
    }
    Ok(cartan_projection(u))
}

/// `e_r^*(x) = Σ_{i_1<⋯<i_r} (x_{i_1} + r − 1)(x_{i_2} + r − 2)⋯(x_{i_r})`.
pub fn shifted_elementary(n: u32, r: u32) -> SymPolynomial {
    let mut out = SymPolynomial::zero();
    for idx in subsets(n, r as usize) {
        let factors: Vec<SymPolynomial> =
            idx.iter().enumerate().map(|(k, &i)| SymPolynomial::var_plus(X(i), r as i64 - 1 - k as i64)).collect();
        out = out.add(&SymPolynomial::product(&factors));
    }
    out
}

/// `h_r^*(x) = Σ_{i_1≤⋯≤i_r} (x_{i_1} − r + 1)(x_{i_2} − r + 2)⋯(x_{i_r})`.
pub fn shifted_complete(n: u32, r: u32) -> SymPolynomial {
    fn rec(start: u32, n: u32, r: u32, cur: &mut Vec<u32>, out: &mut SymPolynomial) {
        if cur.len() == r as usize {
            let factors: Vec<SymPolynomial> = cur
                .iter()
                .enumerate()
                .map(|(k, &i)| SymPolynomial::var_plus(X(i), k as i64 + 1 - r as i64))
                .collect();
            *out = out.add(&SymPolynomial::product(&factors));
            return;
        }
        for i in start..=n {
            cur.push(i);
            rec(i, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = SymPolynomial::zero();
    rec(1, n, r, &mut Vec::new(), &mut out);
    out
}

/// `e_h(x_1, x_2 − 1, …, x_n − (n−1))`.
pub fn elementary_staircase(n: u32, h: u32) -> SymPolynomial {
    let mut out = SymPolynomial::zero();
    for idx in subsets(n, h as usize) {
        let factors: Vec<SymPolynomial> = idx.iter().map(|&i| SymPolynomial::var_plus(X(i), 1 - i as i64)).collect();
        out = out.add(&SymPolynomial::product(&factors));
    }
    out
}

/// `(−1)^{C(p,2) n} ∏_{i<p} (x_1 − i + n − 1)(x_2 − i + n − 2)⋯(x_n − i)`.
pub fn deruyts_image(n: u32, p: u32) -> SymPolynomial {
    let mut out = SymPolynomial::constant(Rational::sign((p as usize * p.saturating_sub(1) as usize / 2) * n as usize));
    for i in 0..p as i64 {
        for k in 1..=n {
            out = out.mul(&SymPolynomial::var_plus(X(k), n as i64 - k as i64 - i));
        }
    }
    out
}

/// `∏_k (x_k − p + n − k)`, the image of `C_n(p)` and `H_n(p)`.
pub fn staircase_product(n: u32, p: &Rational) -> SymPolynomial {
    let mut out = SymPolynomial::one();
    for k in 1..=n {
        let shift = &Rational::from_int(n as i64 - k as i64) - p;
        out = out.mul(&x(k).add(&SymPolynomial::constant(shift)));
    }
    out
}

/// Shifted symmetry: invariance under
/// `(x_i, x_{i+1}) ↦ (x_{i+1} − 1, x_i + 1)` for every adjacent pair.
pub fn is_shifted_symmetric(f: &SymPolynomial, n: u32) -> bool {
    (1..n).all(|i| {
        let g = f.substitute(|v| match v.0 {
            k if k == i => SymPolynomial::var_plus(X(i + 1), -1),
            k if k == i + 1 => SymPolynomial::var_plus(X(i), 1),
            k => x(k),
        });
        g == *f
    })
}

/// A dominant weight `μ_1 ≥ ⋯ ≥ μ_n ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight(Vec<u32>);

impl Weight {
    pub fn new(mu: Vec<u32>) -> Result<Self, CenterError> {
        if mu.windows(2).any(|w| w[0] < w[1]) {
            return Err(CenterError::InvalidWeight(mu));
        }
        Ok(Weight(mu))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn random<R: Rng>(rng: &mut R, n: usize, max: u32) -> Self {
        let mut mu: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max)).collect();
        mu.sort_unstable_by(|a, b| b.cmp(a));
        Weight(mu)
    }

    pub fn as_point(&self) -> Vec<Rational> {
        self.0.iter().map(|&m| Rational::from_int(m as i64)).collect()
    }
}

/// `(−1)^{C(p,2) n} ∏_{i<p} ∏_k (μ_k − i + n − k)`.
pub fn hook_eigenvalue(n: u32, p: u32, mu: &Weight) -> Rational {
    deruyts_image(n, p).eval_at(&mu.as_point())
}

fn leading_minor(k: usize) -> SuperPolynomial {
    let mut out = SuperPolynomial::zero();
    for (perm, odd) in permutations_with_sign(k) {
        let vars: Vec<SuperVariable> =
            perm.iter().enumerate().map(|(j, &i)| SuperVariable::proper(i as u32 + 1, j as u32 + 1)).collect();
        let sign = if odd { Rational::from_int(-1) } else { Rational::ONE };
        out.add_scaled(&SuperPolynomial::product_of(&vars), &sign);
    }
    out
}

/// `∏_k (leading k × k minor of [x_i|j])^{μ_k − μ_{k+1}}` in ℂ[M_{n,n}].
pub fn highest_weight_vector(mu: &Weight) -> SuperPolynomial {
    let m = &mu.0;
    let mut out = SuperPolynomial::one();
    for k in 1..=m.len() {
        let next = m.get(k).copied().unwrap_or(0);
        let minor = leading_minor(k);
        for _ in 0..(m[k - 1] - next) {
            out = out.mul(&minor);
        }
    }
    out
}

/// The scalar by which `u` acts on the highest weight vector of weight `μ`.
pub fn eigenvalue_on_highest_weight(u: &UeaElement, mu: &Weight) -> Result<Rational, CenterError> {
    let v = highest_weight_vector(mu);
    let w = act(u, &v);
    let (m, c) = v.terms().next().expect("highest weight vector is nonzero");
    let lambda = w.coefficient(m) * c.recip();
    if w != v.scale(&lambda) {
        return Err(CenterError::NotEigenvector);
    }
    Ok(lambda)
}

/// Coefficient matrix of the relations `C_n(p) = Σ_j (−1)^{n−j}(p)_{n−j} H_n^{(j)}`
/// for `p = 0, …, n−1`, rows indexed by `p` and columns by `j = n, n−1, …, 1`.
pub fn expansion_matrix(n: u32) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|p| {
            (0..n)
                .map(|c| {
                    let j = n - c;
                    Rational::sign((n - j) as usize) * falling_factorial(&Rational::from_int(p as i64), n - j)
                })
                .collect()
        })
        .collect()
}

/// Coefficient matrix of the Stirling relations, rows `h = 0, …, n−1` and
/// columns `j = n, n−1, …, 1` (the entries of `(−1)^h c(n−h, j)(n−j)!`).
pub fn stirling_matrix(n: u32, alternating: bool) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|h| {
            (1..=n)
                .rev()
                .map(|j| {
                    let mut c = stirling_coefficient(n, h, j) * factorial(n - j) * Rational::sign(h as usize);
                    if alternating {
                        c *= &Rational::sign((n - j) as usize);
                    }
                    c
                })
                .collect()
        })
        .collect()
}

/// Lower triangular with nonzero diagonal.
pub fn is_nonsingular_lower_triangular(m: &[Vec<Rational>]) -> bool {
    m.iter().enumerate().all(|(i, row)| !row[i].is_zero() && row[i + 1..].iter().all(Rational::is_zero))
}

/// Upper triangular with nonzero diagonal.
pub fn is_nonsingular_upper_triangular(m: &[Vec<Rational>]) -> bool {
    m.iter().enumerate().all(|(i, row)| !row[i].is_zero() && row[..i].iter().all(Rational::is_zero))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: u32, j: u32) -> UeaElement {
        UeaElement::e(i, j)
    }

    #[test]
    fn capelli_generators() {
        assert_eq!(capelli_generator(3, 1).unwrap(), e(1, 1).add(&e(2, 2)).add(&e(3, 3)));
        let h22 = cdet(&NcMatrix::from_rows(vec![vec![e(1, 1).add(&scalar(1)), e(1, 2)], vec![e(2, 1), e(2, 2)]]).unwrap());
        assert_eq!(capelli_generator(2, 2).unwrap(), h22);
        assert!(capelli_generator(2, 3).is_err());
        for k in 0..=3 {
            assert_eq!(capelli_generator(3, k).unwrap(), capelli_generator_cdet(3, k).unwrap());
        }
        assert!(is_central(&capelli_generator(2, 2).unwrap(), 2).unwrap());
    }

    #[test]
    fn deruyts_examples() {
        assert_eq!(deruyts(2, 0).unwrap(), UeaElement::one());
        assert_eq!(deruyts(2, 1).unwrap(), capelli_generator(2, 2).unwrap());
        let k12 = e(1, 1).mul(&e(1, 1).sub(&scalar(1))).neg();
        assert_eq!(deruyts(1, 2).unwrap(), k12);
    }

    #[test]
    fn c_n_examples() {
        assert_eq!(c_n(3, 0).unwrap(), capelli_generator(3, 3).unwrap());
        assert_eq!(c_n(1, 4).unwrap(), e(1, 1).sub(&scalar(4)));
        let expected = capelli_generator(2, 2).unwrap().sub(&capelli_generator(2, 1).unwrap());
        assert_eq!(c_n(2, 1).unwrap(), expected);
        assert!(verify_expansion(1, 1));
        assert!(verify_expansion(2, 0));
        assert!(verify_expansion(2, 1));
    }

    #[test]
    fn stirling_numbers() {
        assert_eq!(stirling_first(0, 0), Rational::ONE);
        assert_eq!(stirling_first(3, 1), Rational::from_int(2));
        assert_eq!(stirling_first(3, 2), Rational::from_int(-3));
        assert_eq!(stirling_first(4, 2), Rational::from_int(11));
        assert_eq!(falling_factorial(&Rational::from_int(5), 2), Rational::from_int(20));
        let p = falling_factorial_poly(3);
        assert_eq!(p.eval(&Rational::from_int(5)), scalar(60));
    }

    #[test]
    fn generating_polynomials() {
        assert_eq!(h_n_t(1), UeaPoly::from_coeffs(vec![e(1, 1), scalar(-1)]));
        assert_eq!(h_n_t(2).eval(&Rational::ZERO), capelli_generator(2, 2).unwrap());
        assert_eq!(h_n_t(2), h_n_t_expansion(2).unwrap());
        let c1 = capelli_determinant_c(1);
        assert_eq!(c1, UeaPoly::from_coeffs(vec![e(1, 1), scalar(1)]));
        let n = 2;
        let composed = compose_linear(&h_n_t(n), &Rational::from_int(-1), &Rational::from_int(n as i64 - 1));
        assert_eq!(capelli_determinant_c(n), composed);
        for h in 0..=2 {
            assert_eq!(c_coefficient(2, h).unwrap(), c_coefficient_minor_sum(2, h).unwrap());
        }
        assert_eq!(h_n_value(2, &Rational::from_int(3)), c_n(2, 3).unwrap());
    }

    #[test]
    fn stirling_relation_n1_and_alternating_form() {
        assert!(stirling_relation(1, 0));
        for n in 1..=3 {
            for h in 0..n {
                assert!(stirling_relation_alternating(n, h), "n={n} h={h}");
            }
        }
        // 𝒞_2^{(1)} = H_2^{(1)} − 1 while the non-alternating sum gives −1 − H_2^{(1)}
        assert_eq!(c_coefficient(2, 1).unwrap(), capelli_generator(2, 1).unwrap().sub(&scalar(1)));
        assert_eq!(stirling_rhs(2, 1, false).unwrap(), capelli_generator(2, 1).unwrap().add(&scalar(1)).neg());
    }

    #[test]
    fn permanental_generators() {
        assert_eq!(permanental_generator(1, 1).unwrap(), e(1, 1));
        assert_eq!(permanental_generator(2, 1).unwrap(), capelli_generator(2, 1).unwrap());
        let p = permanental_generator(2, 2).unwrap();
        assert!(is_central(&p, 2).unwrap());
        assert_eq!(harish_chandra(&p, 2).unwrap(), shifted_complete(2, 2));
    }

    #[test]
    fn harish_chandra_examples() {
        assert_eq!(harish_chandra(&capelli_generator(2, 1).unwrap(), 2).unwrap(), x(1).add(&x(2)));
        let chi = harish_chandra(&capelli_generator(2, 2).unwrap(), 2).unwrap();
        assert_eq!(chi, SymPolynomial::var_plus(X(1), 1).mul(&x(2)));
        assert_eq!(chi, shifted_elementary(2, 2));
        assert_eq!(harish_chandra(&deruyts(2, 1).unwrap(), 2).unwrap(), deruyts_image(2, 1));
        assert!(matches!(harish_chandra(&e(1, 2), 2), Err(CenterError::NotCentral(2))));
    }

    #[test]
    fn shifted_polynomials() {
        assert_eq!(shifted_elementary(3, 0), SymPolynomial::one());
        assert_eq!(shifted_elementary(2, 1), x(1).add(&x(2)));
        assert_eq!(shifted_complete(2, 0), SymPolynomial::one());
        assert_eq!(shifted_complete(1, 1), x(1));
        assert_eq!(shifted_complete(1, 2), SymPolynomial::var_plus(X(1), -1).mul(&x(1)));
        assert!(is_shifted_symmetric(&SymPolynomial::one(), 2));
        assert!(!is_shifted_symmetric(&x(1), 2));
        for n in 1..=4 {
            for r in 0..=4 {
                assert!(is_shifted_symmetric(&shifted_elementary(n, r), n));
                assert!(is_shifted_symmetric(&shifted_complete(n, r), n));
            }
        }
    }

    #[test]
    fn hook_values() {
        let w = |v: Vec<u32>| Weight::new(v).unwrap();
        assert_eq!(hook_eigenvalue(3, 0, &w(vec![2, 1, 0])), Rational::ONE);
        assert_eq!(hook_eigenvalue(2, 1, &w(vec![3, 1])), Rational::from_int(4));
        assert_eq!(hook_eigenvalue(1, 2, &w(vec![5])), Rational::from_int(-20));
        assert!(Weight::new(vec![1, 2]).is_err());
    }

    #[test]
    fn eigenvalues_on_highest_weight_vectors() {
        let mu = Weight::new(vec![2, 1]).unwrap();
        let h2 = capelli_generator(2, 2).unwrap();
        let lambda = eigenvalue_on_highest_weight(&h2, &mu).unwrap();
        assert_eq!(lambda, shifted_elementary(2, 2).eval_at(&mu.as_point()));
        assert_eq!(lambda, Rational::from_int(3));
    }

    #[test]
    fn triangular_relations() {
        for n in 1..=4 {
            assert!(is_nonsingular_lower_triangular(&expansion_matrix(n)));
            assert!(is_nonsingular_upper_triangular(&stirling_matrix(n, false)));
            assert!(is_nonsingular_upper_triangular(&stirling_matrix(n, true)));
        }
    }
}
