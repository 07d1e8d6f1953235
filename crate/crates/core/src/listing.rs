//! Listings of binary words and the splice machinery shared by the cycle and
//! path constructions.
//!
//! Both constructions build level `n` by walking the previous level in runs
//! (forward, backward or zigzag) and appending a fixed suffix. A [`Splice`] is
//! that plan: a short list of [`Run`]s over an inner listing. It can be
//! materialized into a [`Listing`] or streamed with [`SpliceStream`].

use alloc::vec::Vec;
use core::fmt;

use crate::bitword::{BinaryWord, MAX_LEN};
use crate::error::{Error, Result};

/// Which of the two binary listings (and derived permutation listings).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Starts at `00…0`, ends at `10…0`.
    Cycle,
    /// Starts at `00…0`, ends at `11…1`.
    Path,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Cycle => "cycle",
            Variant::Path => "path",
        })
    }
}

/// An ordered sequence of equal-length binary words.
///
/// Only the common word length is enforced; distinctness and completeness are
/// properties checked by [`verify::check_coverage`](crate::verify::check_coverage).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Listing {
    width: usize,
    words: Vec<u64>,
}

impl Listing {
    pub fn new(width: usize) -> Result<Self> {
        if width == 0 || width > MAX_LEN {
            return Err(Error::WordLength(width));
        }
        Ok(Self { width, words: Vec::new() })
    }

    pub fn from_words<I>(width: usize, words: I) -> Result<Self>
    where
        I: IntoIterator<Item = BinaryWord>,
    {
        let mut listing = Self::new(width)?;
        for word in words {
            listing.push(word)?;
        }
        Ok(listing)
    }

    /// Parses whitespace-separated words, e.g. `"00 01 11 10"`.
    pub fn parse(text: &str) -> Result<Self> {
        let words = text.split_whitespace().map(str::parse).collect::<Result<Vec<BinaryWord>>>()?;
        let width = words.first().map_or(0, BinaryWord::len);
        Self::from_words(width, words)
    }

    pub(crate) fn from_bits(width: usize, words: Vec<u64>) -> Self {
        Self { width, words }
    }

    pub fn push(&mut self, word: BinaryWord) -> Result<()> {
        if word.len() != self.width {
            return Err(Error::LengthMismatch { left: self.width, right: word.len() });
        }
        self.words.push(word.bits());
        Ok(())
    }

    /// Common length of every word in the listing.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<BinaryWord> {
        self.words.get(index).map(|&b| BinaryWord::from_raw(b, self.width))
    }

    pub fn first(&self) -> Option<BinaryWord> {
        self.get(0)
    }

    pub fn last(&self) -> Option<BinaryWord> {
        self.len().checked_sub(1).and_then(|i| self.get(i))
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = BinaryWord> + ExactSizeIterator + '_ {
        self.words.iter().map(move |&b| BinaryWord::from_raw(b, self.width))
    }

    /// 0-based index of the first occurrence of `word`.
    pub fn position(&self, word: &BinaryWord) -> Option<usize> {
        if word.len() != self.width {
            return None;
        }
        self.words.iter().position(|&b| b == word.bits())
    }

    /// Packed words; see [`BinaryWord::bits`].
    pub fn as_bits(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn bits_at(&self, index: usize) -> u64 {
        self.words[index]
    }
}

impl fmt::Debug for Listing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.iter()).finish()
    }
}

impl fmt::Display for Listing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, word) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{word}")?;
        }
        Ok(())
    }
}

/// Named pieces of the splice constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Segment {
    X1,
    X2,
    X3,
    Y1,
    Y2,
    Y3,
    P00,
    Lower,
    Zigzag,
    Upper,
    P11,
}

/// How a run walks the inner listing. Indices are 0-based and inclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Walk {
    /// Every index from `from` to `to`, each with the run's suffix.
    Straight { from: usize, to: usize, suffix: u64 },
    /// Every index from `from` to `to`, each visited twice with suffixes
    /// `01, 10` then `10, 01`, alternating; consecutive entries on the same
    /// index are adjacent in `G(n)`.
    Zigzag { from: usize, to: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Run {
    pub segment: Segment,
    pub walk: Walk,
}

fn span(from: usize, to: usize) -> usize {
    from.abs_diff(to) + 1
}

fn step(from: usize, to: usize, k: usize) -> usize {
    if to >= from {
        from + k
    } else {
        from - k
    }
}

impl Run {
    pub(crate) fn straight(segment: Segment, from: usize, to: usize, suffix: u64) -> Self {
        Self { segment, walk: Walk::Straight { from, to, suffix } }
    }

    pub(crate) fn zigzag(segment: Segment, from: usize, to: usize) -> Self {
        Self { segment, walk: Walk::Zigzag { from, to } }
    }

    fn len(&self) -> usize {
        match self.walk {
            Walk::Straight { from, to, .. } => span(from, to),
            Walk::Zigzag { from, to } => 2 * span(from, to),
        }
    }

    /// Inner index and suffix of the `k`-th entry of the run.
    fn entry(&self, k: usize) -> (usize, u64) {
        match self.walk {
            Walk::Straight { from, to, suffix } => (step(from, to, k), suffix),
            Walk::Zigzag { from, to } => {
                let (t, second) = (k / 2, k % 2 == 1);
                // (01, 10) on even t, (10, 01) on odd t.
                let suffix = if (t % 2 == 0) != second { 0b01 } else { 0b10 };
                (step(from, to, t), suffix)
            }
        }
    }
}

/// A plan for building the next level from an inner listing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Splice {
    pub runs: Vec<Run>,
    pub suffix_len: usize,
}

impl Splice {
    pub(crate) fn len(&self) -> usize {
        self.runs.iter().map(Run::len).sum()
    }

    pub(crate) fn iter<'a>(&'a self, inner: &'a Listing) -> impl Iterator<Item = u64> + 'a {
        let shift = self.suffix_len;
        self.runs.iter().flat_map(move |run| {
            (0..run.len()).map(move |k| {
                let (index, suffix) = run.entry(k);
                (inner.bits_at(index) << shift) | suffix
            })
        })
    }

    pub(crate) fn materialize(&self, inner: &Listing) -> Listing {
        let mut words = Vec::with_capacity(self.len());
        words.extend(self.iter(inner));
        Listing::from_bits(inner.width() + self.suffix_len, words)
    }

    /// Entries of every run tagged `segment`, in order.
    pub(crate) fn segment(&self, inner: &Listing, segment: Segment) -> Listing {
        let shift = self.suffix_len;
        let words = self
            .runs
            .iter()
            .filter(|run| run.segment == segment)
            .flat_map(|run| {
                (0..run.len()).map(move |k| {
                    let (index, suffix) = run.entry(k);
                    (inner.bits_at(index) << shift) | suffix
                })
            })
            .collect();
        Listing::from_bits(inner.width() + shift, words)
    }
}

/// Streams the next level of a listing without materializing it. Owns the
/// (materialized) inner level.
#[derive(Clone, Debug)]
pub struct SpliceStream {
    inner: Listing,
    splice: Splice,
    run: usize,
    offset: usize,
    remaining: usize,
}

impl SpliceStream {
    pub(crate) fn new(inner: Listing, splice: Splice) -> Self {
        let remaining = splice.len();
        Self { inner, splice, run: 0, offset: 0, remaining }
    }

    /// A stream that yields the given listing as is.
    pub(crate) fn identity(listing: Listing) -> Self {
        let splice = Splice { runs: alloc::vec![Run::straight(Segment::P00, 0, listing.len() - 1, 0)], suffix_len: 0 };
        Self::new(listing, splice)
    }

    /// Word length of the streamed entries.
    pub fn width(&self) -> usize {
        self.inner.width() + self.splice.suffix_len
    }
}

impl Iterator for SpliceStream {
    type Item = BinaryWord;

    fn next(&mut self) -> Option<BinaryWord> {
        let run = self.splice.runs.get(self.run)?;
        let (index, suffix) = run.entry(self.offset);
        self.offset += 1;
        if self.offset == run.len() {
            self.run += 1;
            self.offset = 0;
        }
        self.remaining -= 1;
        let bits = (self.inner.bits_at(index) << self.splice.suffix_len) | suffix;
        Some(BinaryWord::from_raw(bits, self.width()))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining, Some(self.remaining))
    }
}

impl ExactSizeIterator for SpliceStream {}
