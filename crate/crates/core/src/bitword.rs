//! Binary words of fixed length and the augmentation graph `G(n)`.
//!
//! Two words of length `n` are adjacent in `G(n)` when they differ in the
//! first position only, or when one is obtained from the other by swapping an
//! adjacent `01`/`10` pair.
//!
//! Words are packed into a `u64` with position 1 (the leftmost character) in
//! the most significant of the `n` used bits, so the integer value reads like
//! the string and appending a suffix is a shift.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// Longest supported word.
pub const MAX_LEN: usize = 64;

/// Default upper bound on the word length accepted by [`distance_bfs`].
pub const DEFAULT_ORACLE_CAP: usize = 14;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord {
    len: u8,
    bits: u64,
}

fn mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl BinaryWord {
    /// Builds a word from its packed value. `bits` must fit in `len` bits.
    pub fn new(bits: u64, len: usize) -> Result<Self> {
        if len == 0 || len > MAX_LEN {
            return Err(Error::WordLength(len));
        }
        if bits & !mask(len) != 0 {
            return Err(Error::InvalidWord(alloc::format!("{bits:#b} does not fit in {len} bits")));
        }
        Ok(Self { len: len as u8, bits })
    }

    pub(crate) fn from_raw(bits: u64, len: usize) -> Self {
        debug_assert!((1..=MAX_LEN).contains(&len) && bits & !mask(len) == 0);
        Self { len: len as u8, bits }
    }

    pub fn zeros(len: usize) -> Result<Self> {
        Self::new(0, len)
    }

    pub fn ones(len: usize) -> Result<Self> {
        Self::new(mask(len), len)
    }

    /// Word of length `len` with 1s exactly at the given 1-based positions.
    pub fn with_ones_at(len: usize, positions: &[usize]) -> Result<Self> {
        let mut word = Self::zeros(len)?;
        for &p in positions {
            if p == 0 || p > len {
                return Err(Error::InvalidWord(alloc::format!("position {p} outside 1..={len}")));
            }
            word.bits |= 1 << (len - p);
        }
        Ok(word)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    /// Always false; words have length at least 1.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Bit at 0-based index `i` counted from the left, i.e. position `i + 1`.
    pub fn bit(&self, i: usize) -> u8 {
        assert!(i < self.len(), "index {i} out of range for length {}", self.len);
        ((self.bits >> (self.len() - 1 - i)) & 1) as u8
    }

    pub fn count_ones(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Appends `suffix_len` low bits of `suffix` on the right.
    pub fn append(&self, suffix: u64, suffix_len: usize) -> Result<Self> {
        let len = self.len() + suffix_len;
        if len > MAX_LEN {
            return Err(Error::WordLength(len));
        }
        Self::new((self.bits << suffix_len) | (suffix & mask(suffix_len)), len)
    }

    /// All `2^len` words of length `len` in increasing numeric order.
    pub fn all(len: usize) -> Result<impl Iterator<Item = BinaryWord>> {
        if len == 0 || len > MAX_LEN {
            return Err(Error::WordLength(len));
        }
        Ok((0..=mask(len)).map(move |bits| BinaryWord::from_raw(bits, len)))
    }

    fn flip_first(&self) -> Self {
        Self { len: self.len, bits: self.bits ^ (1 << (self.len - 1)) }
    }

    /// Neighbors in `G(n)`, lazily: the first-position flip followed by the
    /// adjacent swaps from left to right.
    pub fn neighbors(&self) -> Neighbors {
        Neighbors { word: *self, next: None }
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.bit(i) == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord({self})")
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || s.len() > MAX_LEN {
            return Err(Error::InvalidWord(String::from(s)));
        }
        let mut bits = 0u64;
        for c in s.chars() {
            bits = match c {
                '0' => bits << 1,
                '1' => (bits << 1) | 1,
                _ => return Err(Error::InvalidWord(String::from(s))),
            };
        }
        Ok(Self::from_raw(bits, s.len()))
    }
}

/// Iterator over the neighbors of a word; see [`BinaryWord::neighbors`].
pub struct Neighbors {
    word: BinaryWord,
    // None before the first-position flip has been yielded, then the next
    // right-shift amount to try for a swap.
    next: Option<usize>,
}

impl Iterator for Neighbors {
    type Item = BinaryWord;

    fn next(&mut self) -> Option<BinaryWord> {
        let len = self.word.len();
        let Some(mut shift) = self.next else {
            self.next = Some(len.saturating_sub(1));
            return Some(self.word.flip_first());
        };
        // shift k addresses the pair of bits k and k - 1, i.e. positions
        // len - k and len - k + 1; walk left to right.
        while shift >= 1 {
            let bits = self.word.bits;
            let k = shift;
            shift -= 1;
            if ((bits >> k) ^ (bits >> (k - 1))) & 1 == 1 {
                self.next = Some(shift);
                return Some(BinaryWord::from_raw(bits ^ (0b11 << (k - 1)), len));
            }
        }
        self.next = Some(0);
        None
    }
}

fn check_lengths(u: &BinaryWord, v: &BinaryWord) -> Result<()> {
    if u.len != v.len {
        return Err(Error::LengthMismatch { left: u.len(), right: v.len() });
    }
    Ok(())
}

fn adjacent_unchecked(u: u64, v: u64, len: usize) -> bool {
    let diff = u ^ v;
    if diff == 1 << (len - 1) {
        return true;
    }
    if diff == 0 {
        return false;
    }
    let k = diff.trailing_zeros();
    diff >> k == 0b11 && ((u >> k) ^ (u >> (k + 1))) & 1 == 1
}

/// True iff `u` and `v` are adjacent in `G(n)`.
pub fn adjacent(u: &BinaryWord, v: &BinaryWord) -> Result<bool> {
    check_lengths(u, v)?;
    Ok(adjacent_unchecked(u.bits, v.bits, u.len()))
}

/// The neighborhood of `u` in `G(n)`; it has `1 + #{i : u_i != u_{i+1}}`
/// elements.
pub fn neighbors(u: &BinaryWord) -> Vec<BinaryWord> {
    u.neighbors().collect()
}

/// Distance in `G(n)` classified as 0, 1, 2 or more than 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Gap {
    Zero = 0,
    One = 1,
    Two = 2,
    More = 3,
}

impl Gap {
    pub fn from_distance(d: usize) -> Gap {
        match d {
            0 => Gap::Zero,
            1 => Gap::One,
            2 => Gap::Two,
            _ => Gap::More,
        }
    }
}

impl fmt::Display for Gap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Gap::Zero => "0",
            Gap::One => "1",
            Gap::Two => "2",
            Gap::More => "MORE",
        })
    }
}

pub(crate) fn gap_unchecked(u: BinaryWord, v: BinaryWord) -> Gap {
    if u.bits == v.bits {
        return Gap::Zero;
    }
    let len = u.len();
    if adjacent_unchecked(u.bits, v.bits, len) {
        return Gap::One;
    }
    // Every neighbor differs from u in at most two positions, so a common
    // neighbor needs u ^ v to have at most four set bits.
    if (u.bits ^ v.bits).count_ones() > 4 {
        return Gap::More;
    }
    if u.neighbors().any(|w| adjacent_unchecked(w.bits, v.bits, len)) {
        Gap::Two
    } else {
        Gap::More
    }
}

/// Classifies the `G(n)` distance between `u` and `v` without a search:
/// 2 means "not adjacent but sharing a neighbor".
pub fn gap(u: &BinaryWord, v: &BinaryWord) -> Result<Gap> {
    check_lengths(u, v)?;
    Ok(gap_unchecked(*u, *v))
}

/// Exact shortest-path length in `G(n)` by breadth-first search over
/// [`neighbors`]. Refuses words longer than `cap`.
pub fn distance_bfs(u: &BinaryWord, v: &BinaryWord, cap: usize) -> Result<usize> {
    check_lengths(u, v)?;
    let len = u.len();
    if len > cap || len > 32 {
        return Err(Error::OracleCap { n: len, cap: cap.min(32) });
    }
    let mut dist = vec![u32::MAX; 1usize << len];
    let mut queue = VecDeque::new();
    dist[u.bits as usize] = 0;
    queue.push_back(*u);
    while let Some(w) = queue.pop_front() {
        let d = dist[w.bits as usize];
        if w == *v {
            return Ok(d as usize);
        }
        for x in w.neighbors() {
            let slot = &mut dist[x.bits as usize];
            if *slot == u32::MAX {
                *slot = d + 1;
                queue.push_back(x);
            }
        }
    }
    // G(n) is connected: first-position flips plus swaps reach every word.
    Err(Error::Construction(alloc::format!("{v} unreachable from {u}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    fn sorted(mut v: Vec<BinaryWord>) -> Vec<BinaryWord> {
        v.sort();
        v
    }

    #[test]
    fn adjacency_examples() {
        assert!(adjacent(&w("000"), &w("100")).unwrap());
        assert!(adjacent(&w("010"), &w("001")).unwrap());
        assert!(!adjacent(&w("110"), &w("011")).unwrap());
        assert!(!adjacent(&w("10"), &w("11")).unwrap());
    }

    #[test]
    fn length_mismatch_is_an_error() {
        assert_eq!(adjacent(&w("00"), &w("000")), Err(Error::LengthMismatch { left: 2, right: 3 }));
        assert!(gap(&w("0"), &w("01")).is_err());
        assert!(distance_bfs(&w("0"), &w("01"), DEFAULT_ORACLE_CAP).is_err());
    }

    #[test]
    fn neighbor_examples() {
        assert_eq!(neighbors(&w("000")), vec![w("100")]);
        assert_eq!(sorted(neighbors(&w("101"))), vec![w("001"), w("011"), w("110")]);
        assert_eq!(neighbors(&w("0")), vec![w("1")]);
    }

    #[test]
    fn bfs_examples() {
        let cap = DEFAULT_ORACLE_CAP;
        assert_eq!(distance_bfs(&w("00"), &w("11"), cap), Ok(3));
        assert_eq!(distance_bfs(&w("000"), &w("010"), cap), Ok(2));
        assert_eq!(distance_bfs(&w("0110"), &w("0110"), cap), Ok(0));
        assert_eq!(distance_bfs(&w("0000"), &w("1111"), cap), Ok(10));
    }

    #[test]
    fn bfs_refuses_above_cap() {
        let u = BinaryWord::zeros(15).unwrap();
        assert_eq!(distance_bfs(&u, &u, DEFAULT_ORACLE_CAP), Err(Error::OracleCap { n: 15, cap: 14 }));
        assert_eq!(distance_bfs(&u, &u, 15), Ok(0));
    }

    #[test]
    fn gap_examples() {
        assert_eq!(gap(&w("001"), &w("011")), Ok(Gap::Two));
        assert_eq!(gap(&w("000"), &w("100")), Ok(Gap::One));
        assert_eq!(gap(&w("0000"), &w("1111")), Ok(Gap::More));
        assert_eq!(gap(&w("0101"), &w("0101")), Ok(Gap::Zero));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w("0010").to_string(), "0010");
        assert_eq!(w("0010").bits(), 0b0010);
        assert_eq!(w("0010").bit(2), 1);
        assert!("".parse::<BinaryWord>().is_err());
        assert!("01a".parse::<BinaryWord>().is_err());
        assert!("0 1".parse::<BinaryWord>().is_err());
        let long = "1".repeat(64);
        assert_eq!(long.parse::<BinaryWord>().unwrap().to_string(), long);
        assert!("1".repeat(65).parse::<BinaryWord>().is_err());
    }

    #[test]
    fn constructors() {
        assert_eq!(BinaryWord::with_ones_at(5, &[1, 5]).unwrap(), w("10001"));
        assert_eq!(BinaryWord::ones(3).unwrap(), w("111"));
        assert_eq!(w("10").append(0b01, 2).unwrap(), w("1001"));
        assert!(BinaryWord::new(0b100, 2).is_err());
        assert!(BinaryWord::zeros(0).is_err());
    }

    #[test]
    fn vertex_count_is_two_to_the_n() {
        for n in 1..=12 {
            let all: Vec<_> = BinaryWord::all(n).unwrap().collect();
            assert_eq!(all.len(), 1 << n);
            assert!(all.windows(2).all(|p| p[0] < p[1]));
        }
    }

    #[test]
    fn degree_formula_exhaustive() {
        for n in 1..=10 {
            for u in BinaryWord::all(n).unwrap() {
                let changes = (0..n - 1).filter(|&i| u.bit(i) != u.bit(i + 1)).count();
                assert_eq!(neighbors(&u).len(), 1 + changes, "{u}");
            }
        }
    }

    // Gap must agree with the BFS oracle on every pair for small n.
    #[test]
    fn gap_matches_bfs_oracle() {
        for n in 1..=7 {
            for u in BinaryWord::all(n).unwrap() {
                for v in BinaryWord::all(n).unwrap() {
                    let d = distance_bfs(&u, &v, DEFAULT_ORACLE_CAP).unwrap();
                    assert_eq!(gap(&u, &v).unwrap(), Gap::from_distance(d), "{u} {v}");
                }
            }
        }
    }

    fn word_pair() -> impl Strategy<Value = (BinaryWord, BinaryWord)> {
        (1usize..=10).prop_flat_map(|n| {
            let m = mask(n);
            (0..=m, 0..=m).prop_map(move |(a, b)| (BinaryWord::from_raw(a, n), BinaryWord::from_raw(b, n)))
        })
    }

    proptest! {
        #[test]
        fn adjacency_symmetric_irreflexive((u, v) in word_pair()) {
            prop_assert_eq!(adjacent(&u, &v).unwrap(), adjacent(&v, &u).unwrap());
            prop_assert!(!adjacent(&u, &u).unwrap());
        }

        #[test]
        fn neighbors_are_exactly_adjacent_words((u, v) in word_pair()) {
            prop_assert_eq!(neighbors(&u).contains(&v), adjacent(&u, &v).unwrap());
        }

        #[test]
        fn gap_agrees_with_bfs_up_to_ten((u, v) in word_pair()) {
            let d = distance_bfs(&u, &v, DEFAULT_ORACLE_CAP).unwrap();
            prop_assert_eq!(gap(&u, &v).unwrap(), Gap::from_distance(d));
        }

        #[test]
        fn text_round_trip((u, _v) in word_pair()) {
            prop_assert_eq!(u.to_string().parse::<BinaryWord>().unwrap(), u);
        }
    }
}
