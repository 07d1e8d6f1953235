//! Permutations, pattern avoidance and the bijection `psi` from binary words
//! of length `n − 1` onto the 132-312-avoiding (Gilbreath) permutations of
//! size `n`.
//!
//! `psi` carries every edge of `G(n − 1)` to a single adjacent transposition,
//! so mapping the two binary listings through it gives Gray codes for
//! `S_n(132, 312)` in which consecutive permutations differ by one or two
//! adjacent transpositions.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::bitword::{BinaryWord, Gap};
use crate::cycle::cycle_listing;
use crate::error::{Error, Result};
use crate::listing::Variant;
use crate::path::path_listing;

/// Largest size accepted by [`enumerate_avoiders`].
pub const AVOIDER_CAP: usize = 10;

/// Distance between permutations in adjacent transpositions, classified
/// like [`Gap`].
pub type PermGap = Gap;

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            let slot = (v as usize).checked_sub(1).filter(|&i| i < n);
            match slot {
                Some(i) if !seen[i] => seen[i] = true,
                _ => return Err(Error::InvalidPermutation(format!("{values:?} is not a permutation of 1..={n}"))),
            }
        }
        Ok(Self(values))
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n as u32).collect())
    }

    /// `n (n−1) … 2 1`.
    pub fn reversal(n: usize) -> Self {
        Self((1..=n as u32).rev().collect())
    }

    /// `2 1 3 4 … n`, the image of `10…0`. For `n < 2` the identity.
    pub fn cycle_end(n: usize) -> Self {
        let mut p = Self::identity(n);
        if n >= 2 {
            p.0.swap(0, 1);
        }
        p
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    /// Digit string such as `54673821`; only defined for `n <= 9`.
    pub fn compact(&self) -> Option<String> {
        (self.len() <= 9).then(|| self.0.iter().map(|v| char::from(b'0' + *v as u8)).collect())
    }
}

/// Space-separated values, e.g. `5 4 6 7 3 8 2 1`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Accepts space-separated integers, or a digit string for `n <= 9`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidPermutation(String::from(s));
        let values = if s.contains(char::is_whitespace) {
            s.split_whitespace().map(|t| t.parse::<u32>().map_err(|_| bad())).collect::<Result<Vec<_>>>()?
        } else {
            if s.is_empty() || s.len() > 9 {
                return Err(bad());
            }
            s.chars().map(|c| c.to_digit(10).ok_or_else(bad)).collect::<Result<Vec<_>>>()?
        };
        Self::new(values)
    }
}

/// Replaces the smallest value by 1, the next by 2, and so on.
pub fn standardize<T: Ord>(seq: &[T]) -> Result<Permutation> {
    let mut order: Vec<usize> = (0..seq.len()).collect();
    order.sort_by(|&a, &b| seq[a].cmp(&seq[b]));
    if order.windows(2).any(|w| seq[w[0]] == seq[w[1]]) {
        return Err(Error::Duplicate);
    }
    let mut ranks = vec![0u32; seq.len()];
    for (rank, &i) in order.iter().enumerate() {
        ranks[i] = rank as u32 + 1;
    }
    Ok(Permutation(ranks))
}

/// Whether some subsequence of `perm` standardizes to `pattern`, by
/// exhaustive search over index subsets.
pub fn contains_pattern(perm: &Permutation, pattern: &Permutation) -> bool {
    fn search(perm: &[u32], pattern: &Permutation, start: usize, chosen: &mut Vec<u32>) -> bool {
        if chosen.len() == pattern.len() {
            return standardize(chosen).is_ok_and(|st| st == *pattern);
        }
        let needed = pattern.len() - chosen.len();
        for i in start..=perm.len() - needed {
            chosen.push(perm[i]);
            let found = search(perm, pattern, i + 1, chosen);
            chosen.pop();
            if found {
                return true;
            }
        }
        false
    }

    if pattern.len() > perm.len() {
        return false;
    }
    search(&perm.0, pattern, 0, &mut Vec::with_capacity(pattern.len()))
}

fn next_permutation(values: &mut [u32]) -> bool {
    let Some(i) = values.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = values.iter().rposition(|&v| v > values[i]).unwrap();
    values.swap(i, j);
    values[i + 1..].reverse();
    true
}

/// Every permutation of size `n` avoiding all of `patterns`, in
/// lexicographic order. Brute force over `S_n`; refuses `n > cap`.
pub fn enumerate_avoiders(n: usize, patterns: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    if n > cap {
        return Err(Error::OracleCap { n, cap });
    }
    let mut current = Permutation::identity(n);
    let mut out = Vec::new();
    loop {
        if !patterns.iter().any(|p| contains_pattern(&current, p)) {
            out.push(current.clone());
        }
        if !next_permutation(&mut current.0) {
            return Ok(out);
        }
    }
}

/// Maps a word `ε` of length `n − 1` to `a_1 … a_n` with
/// `a_1 = #ones + 1`, and for `i >= 1`:
/// `a_{i+1} = a_1 + #{j <= i : ε_j = 0}` when `ε_i = 0`,
/// `a_{i+1} = #{j >= i : ε_j = 1}` when `ε_i = 1`.
pub fn psi(word: &BinaryWord) -> Permutation {
    let len = word.len();
    let ones = word.count_ones() as u32;
    let first = ones + 1;
    let mut values = Vec::with_capacity(len + 1);
    values.push(first);
    let (mut zeros_seen, mut ones_left) = (0u32, ones);
    for i in 0..len {
        if word.bit(i) == 0 {
            zeros_seen += 1;
            values.push(first + zeros_seen);
        } else {
            values.push(ones_left);
            ones_left -= 1;
        }
    }
    Permutation(values)
}

/// Inverse of [`psi`]: `ε_i = 1` iff `a_{i+1} < a_1`. Fails for permutations
/// outside `S_n(132, 312)`.
pub fn psi_inv(perm: &Permutation) -> Result<BinaryWord> {
    let values = perm.values();
    if values.len() < 2 {
        return Err(Error::NotInImage(format!("{perm}")));
    }
    let first = values[0];
    let bits = values[1..].iter().fold(0u64, |acc, &v| (acc << 1) | u64::from(v < first));
    let word = BinaryWord::new(bits, values.len() - 1)?;
    if psi(&word) != *perm {
        return Err(Error::NotInImage(format!("{perm}")));
    }
    Ok(word)
}

fn one_swap_apart(s: &[u32], t: &[u32]) -> bool {
    let mut diff = s.iter().zip(t).enumerate().filter(|(_, (a, b))| a != b).map(|(i, _)| i);
    match (diff.next(), diff.next(), diff.next()) {
        (Some(i), Some(j), None) => j == i + 1 && s[i] == t[j] && s[j] == t[i],
        _ => false,
    }
}

pub(crate) fn perm_gap_unchecked(s: &Permutation, t: &Permutation) -> Gap {
    if s == t {
        return Gap::Zero;
    }
    if one_swap_apart(&s.0, &t.0) {
        return Gap::One;
    }
    // Two swaps move at most four positions.
    if s.0.iter().zip(&t.0).filter(|(a, b)| a != b).count() > 4 {
        return Gap::More;
    }
    let mut theta = s.0.clone();
    for i in 0..theta.len().saturating_sub(1) {
        theta.swap(i, i + 1);
        let hit = one_swap_apart(&theta, &t.0);
        theta.swap(i, i + 1);
        if hit {
            return Gap::Two;
        }
    }
    Gap::More
}

/// Adjacent-transposition distance between `s` and `t`, classified as
/// 0, 1, 2 or more.
pub fn perm_gap(s: &Permutation, t: &Permutation) -> Result<PermGap> {
    if s.len() != t.len() {
        return Err(Error::LengthMismatch { left: s.len(), right: t.len() });
    }
    Ok(perm_gap_unchecked(s, t))
}

/// The cycle or path listing of words of length `n − 1`, mapped through
/// [`psi`] in order.
pub fn perm_listing(n: usize, variant: Variant) -> Result<Vec<Permutation>> {
    if n < 2 {
        return Err(Error::InvalidPermutation(format!("permutation listings need n >= 2, got {n}")));
    }
    let words = match variant {
        Variant::Cycle => cycle_listing(n - 1)?,
        Variant::Path => path_listing(n - 1)?,
    };
    Ok(words.iter().map(|w| psi(&w)).collect())
}
