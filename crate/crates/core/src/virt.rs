//! The virtual subalgebra: irregular expressions, balanced monomials, the
//! Capelli epimorphism π and the representation ϱ on forms.
//!
//! π is computed by straightening in the left module U / Irr: the PBW order
//! puts generators with a virtual column last, so every monomial that still
//! carries one is an irregular expression and is dropped on sight. What
//! survives is the proper part, i.e. π of the input.

use rand::seq::SliceRandom;
use rand::Rng;
use rustc_hash::FxHashMap;

use crate::exact::Rational;
use crate::superpoly::{apply_polarization_word, superpolarize, SuperPolynomial};
use crate::symbol::{Symbol, SymbolKind};
use crate::uea::{super_commutator_terms, word_modulo_irregular, Generator, PbwMonomial, UeaElement};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VirtError {
    #[error("malformed balanced monomial: {0}")]
    Malformed(String),
    #[error("creations and annihilations use different virtual multisets")]
    Unbalanced,
    #[error("internal consistency: virtual monomial {0} survived devirtualization without an irregularity certificate")]
    Uncertified(String),
}

/// Definition of an irregular expression, read on `w = e_{a_m b_m} ⋯ e_{a_1 b_1}`
/// (last element of the slice is `e_{a_1 b_1}`): true iff for some `i` and
/// virtual `γ`, `#{j ≤ i : b_j = γ} > #{j < i : a_j = γ}`.
pub fn is_irregular(w: &[Generator]) -> bool {
    let mut created: FxHashMap<Symbol, usize> = FxHashMap::default();
    let mut consumed: FxHashMap<Symbol, usize> = FxHashMap::default();
    for g in w.iter().rev() {
        let b = g.col();
        if b.is_virtual() {
            let n = consumed.entry(b).or_insert(0);
            *n += 1;
            if *n > created.get(&b).copied().unwrap_or(0) {
                return true;
            }
        }
        let a = g.row();
        if a.is_virtual() {
            *created.entry(a).or_insert(0) += 1;
        }
    }
    false
}

/// `e_{x_{i_1},γ_1} ⋯ e_{x_{i_k},γ_k} · e_{γ'_1,x_{j_1}} ⋯ e_{γ'_k,x_{j_k}}`
/// with equal virtual multisets on both sides.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BalancedMonomial {
    creations: Vec<Generator>,
    annihilations: Vec<Generator>,
}

impl BalancedMonomial {
    pub fn new(creations: Vec<Generator>, annihilations: Vec<Generator>) -> Result<Self, VirtError> {
        for g in &creations {
            if !(g.row().is_proper() && g.col().is_virtual()) {
                return Err(VirtError::Malformed(format!("{g} is not a creation e[x,γ]")));
            }
        }
        for g in &annihilations {
            if !(g.row().is_virtual() && g.col().is_proper()) {
                return Err(VirtError::Malformed(format!("{g} is not an annihilation e[γ,x]")));
            }
        }
        let mut up: Vec<Symbol> = creations.iter().map(|g| g.col()).collect();
        let mut down: Vec<Symbol> = annihilations.iter().map(|g| g.row()).collect();
        up.sort();
        down.sort();
        if up != down {
            return Err(VirtError::Unbalanced);
        }
        Ok(BalancedMonomial { creations, annihilations })
    }

    /// Builds the monomial from `(proper index, virtual symbol)` pairs.
    pub fn from_pairs(creations: &[(u32, Symbol)], annihilations: &[(Symbol, u32)]) -> Result<Self, VirtError> {
        Self::new(
            creations.iter().map(|&(i, g)| Generator::new(Symbol::proper(i), g)).collect(),
            annihilations.iter().map(|&(g, j)| Generator::new(g, Symbol::proper(j))).collect(),
        )
    }

    pub fn creations(&self) -> &[Generator] {
        &self.creations
    }

    pub fn annihilations(&self) -> &[Generator] {
        &self.annihilations
    }

    pub fn word(&self) -> Vec<Generator> {
        let mut w = self.creations.clone();
        w.extend_from_slice(&self.annihilations);
        w
    }

    pub fn virtual_symbols(&self) -> Vec<Symbol> {
        let mut s: Vec<Symbol> = self.creations.iter().map(|g| g.col()).collect();
        s.sort();
        s.dedup();
        s
    }

    /// Applies a kind-preserving renaming of the virtual symbols.
    pub fn renamed(&self, rename: impl Fn(Symbol) -> Symbol) -> Result<Self, VirtError> {
        let map = |g: &Generator| {
            let r = if g.row().is_virtual() { rename(g.row()) } else { g.row() };
            let c = if g.col().is_virtual() { rename(g.col()) } else { g.col() };
            Generator::new(r, c)
        };
        for s in self.virtual_symbols() {
            if rename(s).kind != s.kind {
                return Err(VirtError::Malformed(format!("renaming changes the kind of {s}")));
            }
        }
        Self::new(self.creations.iter().map(map).collect(), self.annihilations.iter().map(map).collect())
    }

    /// Same monomial with every virtual index shifted by `offset`.
    pub fn with_fresh_symbols(&self, offset: u32) -> Self {
        self.renamed(|s| Symbol { kind: s.kind, index: s.index + offset })
            .expect("shifting indices preserves kinds and balance")
    }
}

impl std::fmt::Display for BalancedMonomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for g in &self.creations {
            write!(f, "{g}")?;
        }
        write!(f, "·")?;
        for g in &self.annihilations {
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

fn devirtualize(reduced: UeaElement) -> Result<UeaElement, VirtError> {
    let mut out = UeaElement::zero();
    for (m, c) in reduced.terms() {
        if m.is_proper() {
            out.add_term(m.clone(), c);
        } else if !is_irregular(m.generators()) {
            return Err(VirtError::Uncertified(format!("{m:?}")));
        }
    }
    Ok(out)
}

/// Devirtualizes an arbitrary generator word; the word must reduce to a
/// proper element modulo irregular expressions.
pub fn pi_word(w: &[Generator]) -> Result<UeaElement, VirtError> {
    devirtualize(word_modulo_irregular(w))
}

/// The Capelli epimorphism on a balanced monomial.
pub fn capelli_pi(b: &BalancedMonomial) -> Result<UeaElement, VirtError> {
    pi_word(&b.word())
}

/// π by full straightening in U(gl(m₁|m₂+n)) followed by discarding the
/// (certified irregular) virtual monomials. Slow; kept as a cross-check of
/// the module-level reduction.
pub fn capelli_pi_full_straightening(b: &BalancedMonomial) -> Result<UeaElement, VirtError> {
    devirtualize(UeaElement::from_word(&b.word()))
}

/// π through adjoint actions: `π[ad(C_1)⋯ad(C_k)(A_1⋯A_k)]`, the super-Leibniz
/// expansion carried out on unnormalized words before devirtualizing.
pub fn pi_via_adjoint(b: &BalancedMonomial) -> Result<UeaElement, VirtError> {
    let mut words: FxHashMap<Vec<Generator>, Rational> = FxHashMap::default();
    words.insert(b.annihilations.clone(), Rational::ONE);
    for &c in b.creations.iter().rev() {
        let mut next: FxHashMap<Vec<Generator>, Rational> = FxHashMap::default();
        for (w, coef) in &words {
            let mut prefix_odd = false;
            for (i, &h) in w.iter().enumerate() {
                let sign_flip = c.is_odd() && prefix_odd;
                for (k, kc) in super_commutator_terms(c, h) {
                    let mut nw = w.clone();
                    nw[i] = k;
                    let mut v = coef * &kc;
                    if sign_flip {
                        v = -v;
                    }
                    let e = next.entry(nw).or_insert(Rational::ZERO);
                    *e += &v;
                }
                prefix_odd ^= h.is_odd();
            }
        }
        next.retain(|_, v| !v.is_zero());
        words = next;
    }
    let mut out = UeaElement::zero();
    for (w, coef) in &words {
        out.add_scaled(&pi_word(w)?, coef);
    }
    Ok(out)
}

/// `π(ad(g)(b))` for a proper generator `g`, with `ad(g)` expanded as a
/// derivation over the word of `b` before devirtualizing.
pub fn pi_of_adjoint(g: Generator, b: &BalancedMonomial) -> Result<UeaElement, VirtError> {
    let w = b.word();
    let mut out = UeaElement::zero();
    for (i, &h) in w.iter().enumerate() {
        for (k, c) in super_commutator_terms(g, h) {
            let mut nw = w.clone();
            nw[i] = k;
            out.add_scaled(&pi_word(&nw)?, &c);
        }
    }
    Ok(out)
}

/// 𝓗_n = e_{x_n,γ} ⋯ e_{x_1,γ} · e_{γ,x_1} ⋯ e_{γ,x_n} for a virtual `γ`.
pub fn virtual_capelli_word(n: u32, gamma: Symbol) -> BalancedMonomial {
    let creations: Vec<(u32, Symbol)> = (1..=n).rev().map(|i| (i, gamma)).collect();
    let annihilations: Vec<(Symbol, u32)> = (1..=n).map(|i| (gamma, i)).collect();
    BalancedMonomial::from_pairs(&creations, &annihilations).expect("Capelli word is balanced")
}

/// ϱ on a generator word: the last generator acts first.
pub fn act_word(w: &[Generator], f: &SuperPolynomial) -> SuperPolynomial {
    let pairs: Vec<(Symbol, Symbol)> = w.iter().map(|g| (g.row(), g.col())).collect();
    apply_polarization_word(&pairs, f)
}

/// ϱ extended linearly to an enveloping-algebra element. Suffixes shared by
/// several PBW monomials are evaluated once.
pub fn act(u: &UeaElement, f: &SuperPolynomial) -> SuperPolynomial {
    let mut memo: FxHashMap<Vec<Generator>, SuperPolynomial> = FxHashMap::default();
    let mut out = SuperPolynomial::zero();
    for (m, c) in u.terms() {
        let v = act_suffix(m.generators(), f, &mut memo);
        out.add_scaled(&v, c);
    }
    out
}

fn act_suffix(
    w: &[Generator],
    f: &SuperPolynomial,
    memo: &mut FxHashMap<Vec<Generator>, SuperPolynomial>,
) -> SuperPolynomial {
    if w.is_empty() {
        return f.clone();
    }
    if let Some(v) = memo.get(w) {
        return v.clone();
    }
    let inner = act_suffix(&w[1..], f, memo);
    let v = if inner.is_zero() { inner } else { superpolarize(w[0].row(), w[0].col(), &inner) };
    memo.insert(w.to_vec(), v.clone());
    v
}

/// ϱ on a balanced monomial (its word, not its π-image).
pub fn act_balanced(b: &BalancedMonomial, f: &SuperPolynomial) -> SuperPolynomial {
    act_word(&b.word(), f)
}

/// Random balanced monomial over proper letters `1..=n` with at most
/// `max_symbols` distinct virtual symbols and `max_pairs` creation factors.
pub fn random_balanced<R: Rng>(rng: &mut R, n: u32, max_symbols: usize, max_pairs: usize) -> BalancedMonomial {
    let k = rng.gen_range(1..=max_pairs);
    let nsym = rng.gen_range(1..=max_symbols.min(k));
    let symbols: Vec<Symbol> = (0..nsym)
        .map(|s| {
            if rng.gen_bool(0.5) {
                Symbol::virtual_even(s as u32 + 1)
            } else {
                Symbol::virtual_odd(s as u32 + 1)
            }
        })
        .collect();
    // every chosen symbol appears at least once
    let mut multiset: Vec<Symbol> = symbols.clone();
    while multiset.len() < k {
        multiset.push(*symbols.choose(rng).expect("nonempty"));
    }
    multiset.shuffle(rng);
    let creations: Vec<(u32, Symbol)> = multiset.iter().map(|&g| (rng.gen_range(1..=n), g)).collect();
    multiset.shuffle(rng);
    let annihilations: Vec<(Symbol, u32)> = multiset.iter().map(|&g| (g, rng.gen_range(1..=n))).collect();
    BalancedMonomial::from_pairs(&creations, &annihilations).expect("balanced by construction")
}

/// Proper PBW monomials appear with coefficients; exposed for tests that
/// want to inspect individual terms.
pub fn proper_terms(u: &UeaElement) -> Vec<(PbwMonomial, Rational)> {
    u.terms().map(|(m, c)| (m.clone(), c.clone())).collect()
}

pub fn even_symbol(i: u32) -> Symbol {
    Symbol { kind: SymbolKind::VirtualEven, index: i }
}

pub fn odd_symbol(i: u32) -> Symbol {
    Symbol { kind: SymbolKind::VirtualOdd, index: i }
}
