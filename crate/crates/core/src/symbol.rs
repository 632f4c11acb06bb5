//! The three symbol families: proper letters `x_i`, even virtual letters
//! `α_s` and odd virtual letters `β_t`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Z₂ grading, `Even = 0`, `Odd = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn from_bit(b: u8) -> Self {
        if b & 1 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn flip(self) -> Self {
        Parity::from_bit(self.bit() ^ 1)
    }
}

impl std::ops::Add for Parity {
    type Output = Parity;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() ^ rhs.bit())
    }
}

/// Declaration order is the symbol order: proper letters come first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SymbolKind {
    Proper,
    VirtualEven,
    VirtualOdd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Symbol {
    pub kind: SymbolKind,
    pub index: u32,
}

pub const MAX_SYMBOL_INDEX: u32 = (1 << 18) - 1;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid symbol {0:?}")]
pub struct ParseSymbolError(pub String);

impl Symbol {
    pub fn proper(i: u32) -> Self {
        debug_assert!((1..=MAX_SYMBOL_INDEX).contains(&i));
        Symbol { kind: SymbolKind::Proper, index: i }
    }

    pub fn virtual_even(s: u32) -> Self {
        Symbol { kind: SymbolKind::VirtualEven, index: s }
    }

    pub fn virtual_odd(t: u32) -> Self {
        Symbol { kind: SymbolKind::VirtualOdd, index: t }
    }

    /// Symbol parity in gl(m₁|m₂+n): even virtual letters are even, odd
    /// virtual letters and proper letters are odd.
    pub fn parity(self) -> Parity {
        match self.kind {
            SymbolKind::VirtualEven => Parity::Even,
            SymbolKind::VirtualOdd | SymbolKind::Proper => Parity::Odd,
        }
    }

    pub fn is_proper(self) -> bool {
        self.kind == SymbolKind::Proper
    }

    pub fn is_virtual(self) -> bool {
        !self.is_proper()
    }

    /// Dense code used for packing generators; order-preserving.
    pub(crate) fn code(self) -> u64 {
        let k = match self.kind {
            SymbolKind::Proper => 0u64,
            SymbolKind::VirtualEven => 1,
            SymbolKind::VirtualOdd => 2,
        };
        (k << 18) | self.index as u64
    }

    pub(crate) fn from_code(code: u64) -> Self {
        let kind = match code >> 18 {
            0 => SymbolKind::Proper,
            1 => SymbolKind::VirtualEven,
            _ => SymbolKind::VirtualOdd,
        };
        Symbol { kind, index: (code & MAX_SYMBOL_INDEX as u64) as u32 }
    }

    /// Letter used by the polynomial text form: `x`, `a` or `b`.
    pub fn letter(self) -> char {
        match self.kind {
            SymbolKind::Proper => 'x',
            SymbolKind::VirtualEven => 'a',
            SymbolKind::VirtualOdd => 'b',
        }
    }
}

impl fmt::Display for Symbol {
    /// Proper symbols print as their bare index, virtual ones as `a3` / `b1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SymbolKind::Proper => write!(f, "{}", self.index),
            _ => write!(f, "{}{}", self.letter(), self.index),
        }
    }
}

impl FromStr for Symbol {
    type Err = ParseSymbolError;

    /// Accepts `3`, `x3`, `a2`, `b1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let err = || ParseSymbolError(s.to_string());
        let (kind, digits) = match t.chars().next() {
            Some('x') => (SymbolKind::Proper, &t[1..]),
            Some('a') => (SymbolKind::VirtualEven, &t[1..]),
            Some('b') => (SymbolKind::VirtualOdd, &t[1..]),
            Some(c) if c.is_ascii_digit() => (SymbolKind::Proper, t),
            _ => return Err(err()),
        };
        let index: u32 = digits.parse().map_err(|_| err())?;
        if index == 0 || index > MAX_SYMBOL_INDEX {
            return Err(err());
        }
        Ok(Symbol { kind, index })
    }
}

/// Hands out fresh virtual symbols on demand.
#[derive(Debug, Clone)]
pub struct VirtualPool {
    next_even: u32,
    next_odd: u32,
}

impl Default for VirtualPool {
    fn default() -> Self {
        VirtualPool { next_even: 1, next_odd: 1 }
    }
}

impl VirtualPool {
    pub fn new() -> Self {
        Self::default()
    }

    /// A pool whose first symbols are `a{start}` and `b{start}`.
    pub fn starting_at(start: u32) -> Self {
        VirtualPool { next_even: start, next_odd: start }
    }

    pub fn fresh(&mut self, kind: SymbolKind) -> Symbol {
        match kind {
            SymbolKind::VirtualEven => {
                let s = Symbol::virtual_even(self.next_even);
                self.next_even += 1;
                s
            }
            SymbolKind::VirtualOdd => {
                let s = Symbol::virtual_odd(self.next_odd);
                self.next_odd += 1;
                s
            }
            SymbolKind::Proper => panic!("proper symbols are not pooled"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parities_follow_the_graded_space() {
        assert_eq!(Symbol::virtual_even(1).parity(), Parity::Even);
        assert_eq!(Symbol::virtual_odd(1).parity(), Parity::Odd);
        assert_eq!(Symbol::proper(1).parity(), Parity::Odd);
    }

    #[test]
    fn code_roundtrip_and_order() {
        let syms = [Symbol::proper(2), Symbol::virtual_even(7), Symbol::virtual_odd(1)];
        for s in syms {
            assert_eq!(Symbol::from_code(s.code()), s);
        }
        assert!(Symbol::proper(9).code() < Symbol::virtual_even(1).code());
        assert!(Symbol::proper(9) < Symbol::virtual_even(1));
    }

    #[test]
    fn parse_symbols() {
        assert_eq!("3".parse::<Symbol>().unwrap(), Symbol::proper(3));
        assert_eq!("x3".parse::<Symbol>().unwrap(), Symbol::proper(3));
        assert_eq!("a2".parse::<Symbol>().unwrap(), Symbol::virtual_even(2));
        assert!("c1".parse::<Symbol>().is_err());
        assert!("x0".parse::<Symbol>().is_err());
    }

    #[test]
    fn pool_allocates_distinct() {
        let mut pool = VirtualPool::new();
        let a = pool.fresh(SymbolKind::VirtualEven);
        let b = pool.fresh(SymbolKind::VirtualEven);
        let c = pool.fresh(SymbolKind::VirtualOdd);
        assert_ne!(a, b);
        assert_eq!(c, Symbol::virtual_odd(1));
    }
}
