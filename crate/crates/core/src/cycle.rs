//! The listing of `V(G(n))` from `00…0` to `10…0`.
//!
//! Levels alternate between two splice steps. From an odd level `L` (length
//! `m`) satisfying A1–A4, with `i` the index of the pair `10…01, 00…01`:
//!
//! ```text
//! X1 = L[..=i]·0    X2 = reverse(L)·1    X3 = L[i+1..]·0
//! ```
//!
//! From an even level satisfying B1–B4, with `i` the index of the pair
//! `10…01, 001…01`:
//!
//! ```text
//! Y1 = L[..=i]·0    Y2 = (L[m-1], L[0], …, L[m-2])·1    Y3 = L[i+1..]·0
//! ```
//!
//! Every level from 4 upwards is grown from the base listing of `G(3)`.

use alloc::format;
use alloc::vec;

use crate::bitword::BinaryWord;
use crate::error::{Error, Result};
use crate::listing::{Listing, Run, Segment, Splice, SpliceStream};
use crate::verify::{check_binary_properties, check_coverage, CheckOptions, PropertyReport, PropertySet};

/// The listings for `n = 1, 2, 3` that seed the construction.
pub fn base_cycle(n: usize) -> Result<Listing> {
    let text = match n {
        1 => "0 1",
        2 => "00 01 11 10",
        3 => "000 010 110 011 111 101 001 100",
        _ => return Err(Error::BaseSize(n)),
    };
    Listing::parse(text)
}

/// 0-based index `i` of the first place where `first` is immediately
/// followed by `second`.
pub fn find_pair(listing: &Listing, first: &BinaryWord, second: &BinaryWord) -> Result<usize> {
    let bits = listing.as_bits();
    if first.len() == listing.width() && second.len() == listing.width() {
        if let Some(i) = bits.windows(2).position(|p| p[0] == first.bits() && p[1] == second.bits()) {
            return Ok(i);
        }
    }
    Err(Error::Construction(format!("{first} is never immediately followed by {second}")))
}

// Required to exist for every odd level >= 3 (A3) and even level >= 4 (B3).
fn splice_pair(width: usize) -> Result<(BinaryWord, BinaryWord)> {
    let corner = BinaryWord::with_ones_at(width, &[1, width])?;
    let partner = if width % 2 == 1 {
        BinaryWord::with_ones_at(width, &[width])?
    } else {
        BinaryWord::with_ones_at(width, &[3, width])?
    };
    Ok((corner, partner))
}

fn plan(listing: &Listing) -> Result<Splice> {
    let width = listing.width();
    let (corner, partner) = splice_pair(width)?;
    let i = find_pair(listing, &corner, &partner)?;
    let last = listing.len() - 1;
    let runs = if width % 2 == 1 {
        vec![
            Run::straight(Segment::X1, 0, i, 0),
            Run::straight(Segment::X2, last, 0, 1),
            Run::straight(Segment::X3, i + 1, last, 0),
        ]
    } else {
        vec![
            Run::straight(Segment::Y1, 0, i, 0),
            Run::straight(Segment::Y2, last, last, 1),
            Run::straight(Segment::Y2, 0, last - 1, 1),
            Run::straight(Segment::Y3, i + 1, last, 0),
        ]
    };
    Ok(Splice { runs, suffix_len: 1 })
}

fn first_failure(reports: alloc::vec::Vec<PropertyReport>) -> Result<()> {
    match reports.into_iter().find(|r| !r.passed()) {
        None => Ok(()),
        Some(r) => {
            let detail =
                r.counterexample().map_or_else(Default::default, |c| format!("at {}: {}", c.position, c.detail));
            Err(Error::Invariant { property: r.id, detail })
        }
    }
}

fn require(listing: &Listing, set: PropertySet) -> Result<()> {
    first_failure(alloc::vec![check_coverage(listing)])?;
    first_failure(check_binary_properties(listing, set, &CheckOptions::default()))
}

fn require_width(listing: &Listing, odd: bool) -> Result<()> {
    let w = listing.width();
    let ok = if odd { w >= 3 && w % 2 == 1 } else { w >= 4 && w.is_multiple_of(2) };
    if ok {
        Ok(())
    } else {
        Err(Error::Construction(format!(
            "expected an {} width, got {w}",
            if odd { "odd (>= 3)" } else { "even (>= 4)" }
        )))
    }
}

/// One odd→even step. The input must satisfy A1–A4; the output satisfies
/// B1–B4.
pub fn extend_odd_to_even(listing: &Listing) -> Result<Listing> {
    require_width(listing, true)?;
    require(listing, PropertySet::A)?;
    Ok(plan(listing)?.materialize(listing))
}

/// One even→odd step. The input must satisfy B1–B4; the output satisfies
/// A1–A4.
pub fn extend_even_to_odd(listing: &Listing) -> Result<Listing> {
    require_width(listing, false)?;
    require(listing, PropertySet::B)?;
    Ok(plan(listing)?.materialize(listing))
}

fn level_set(width: usize) -> PropertySet {
    if width % 2 == 1 {
        PropertySet::A
    } else {
        PropertySet::B
    }
}

/// Builds levels 4..=target from the `G(3)` base. Induction hypotheses are
/// re-checked at every level in debug builds.
fn grow(target: usize) -> Result<Listing> {
    let mut level = base_cycle(3)?;
    while level.width() < target {
        if cfg!(debug_assertions) {
            require(&level, level_set(level.width()))?;
        }
        level = plan(&level)?.materialize(&level);
    }
    Ok(level)
}

/// The listing of `V(G(n))` satisfying L1–L3, verified before it is
/// returned.
pub fn cycle_listing(n: usize) -> Result<Listing> {
    let listing = match n {
        0 => return Err(Error::WordLength(0)),
        1..=3 => base_cycle(n)?,
        _ => grow(n)?,
    };
    require(&listing, PropertySet::L)?;
    if n >= 4 && cfg!(debug_assertions) {
        require(&listing, level_set(n))?;
    }
    Ok(listing)
}

/// Streams `cycle_listing(n)` while holding only level `n - 1` in memory.
pub fn cycle_stream(n: usize) -> Result<SpliceStream> {
    if n <= 3 {
        return Ok(SpliceStream::identity(cycle_listing(n)?));
    }
    let inner = cycle_listing(n - 1)?;
    let splice = plan(&inner)?;
    Ok(SpliceStream::new(inner, splice))
}

/// Named segment (X1–X3 or Y1–Y3) of the step applied to `listing`.
pub fn step_segment(listing: &Listing, segment: Segment) -> Result<Listing> {
    Ok(plan(listing)?.segment(listing, segment))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec::Vec;

    const EXAMPLE_4: &str = "0000 0100 1100 0110 1110 1010 1001 0011 1011 1111 0111 1101 0101 0001 0010 1000";
    const EXAMPLE_5: &str = "00000 01000 11000 01100 11100 10100 10010 10001 00001 01001 11001 01101 11101 10101 \
        10011 00111 10111 11111 01111 11011 01011 00011 00101 00110 10110 11110 01110 11010 01010 00010 00100 10000";

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn base_listings() {
        assert_eq!(base_cycle(1).unwrap().to_string(), "0 1");
        assert_eq!(base_cycle(2).unwrap().to_string(), "00 01 11 10");
        assert_eq!(base_cycle(3).unwrap().to_string(), "000 010 110 011 111 101 001 100");
        assert_eq!(base_cycle(4), Err(Error::BaseSize(4)));
        assert_eq!(base_cycle(0), Err(Error::BaseSize(0)));
    }

    #[test]
    fn find_pair_examples() {
        // Positions 6 and 2 in 1-based numbering.
        assert_eq!(find_pair(&base_cycle(3).unwrap(), &w("101"), &w("001")), Ok(5));
        assert_eq!(find_pair(&base_cycle(2).unwrap(), &w("01"), &w("11")), Ok(1));
        let ex4 = Listing::parse(EXAMPLE_4).unwrap();
        assert_eq!(find_pair(&ex4, &w("1001"), &w("0011")), Ok(6));
        assert!(find_pair(&ex4, &w("0011"), &w("1001")).is_err());
        assert!(find_pair(&ex4, &w("001"), &w("101")).is_err());
    }

    #[test]
    fn odd_to_even_from_length_three() {
        let out = extend_odd_to_even(&base_cycle(3).unwrap()).unwrap();
        assert_eq!(out.to_string(), EXAMPLE_4);
        assert_eq!(out.get(14), Some(w("0010")));
    }

    #[test]
    fn even_to_odd_from_length_four() {
        let ex4 = Listing::parse(EXAMPLE_4).unwrap();
        let out = extend_even_to_odd(&ex4).unwrap();
        assert_eq!(out.to_string(), EXAMPLE_5.split_whitespace().collect::<Vec<_>>().join(" "));
        assert_eq!(out.get(30), Some(w("00100")));
        let y2 = step_segment(&ex4, Segment::Y2).unwrap();
        assert_eq!(y2.get(0), Some(w("10001")));
        assert_eq!(y2.get(1), Some(w("00001")));
        assert_eq!(crate::gap(&w("10001"), &w("00001")), Ok(crate::Gap::One));
    }

    #[test]
    fn steps_reject_inputs_without_their_hypotheses() {
        // Width 2 is too short for either step.
        assert!(extend_even_to_odd(&base_cycle(2).unwrap()).is_err());
        assert!(extend_odd_to_even(&base_cycle(2).unwrap()).is_err());
        // The length-4 listing reversed breaks B1.
        let rev = Listing::from_words(4, Listing::parse(EXAMPLE_4).unwrap().iter().rev()).unwrap();
        match extend_even_to_odd(&rev) {
            Err(Error::Invariant { property, .. }) => assert_eq!(property, crate::PropertyId::B1),
            other => panic!("unexpected {other:?}"),
        }
        // Parity is checked before anything else.
        assert!(extend_odd_to_even(&Listing::parse(EXAMPLE_4).unwrap()).is_err());
    }

    #[test]
    fn cycle_listing_matches_fixtures() {
        assert_eq!(cycle_listing(4).unwrap().to_string(), EXAMPLE_4);
        assert_eq!(cycle_listing(5).unwrap(), Listing::parse(EXAMPLE_5).unwrap());
        assert!(cycle_listing(0).is_err());
    }

    #[test]
    fn levels_carry_their_induction_hypotheses() {
        for n in 3..=12 {
            let l = cycle_listing(n).unwrap();
            assert_eq!(l.len(), 1 << n);
            let reports = check_binary_properties(&l, level_set(n), &CheckOptions::default());
            assert!(reports.iter().all(|r| r.passed()), "n = {n}: {reports:?}");
        }
    }

    #[test]
    fn stream_matches_materialized() {
        for n in 1..=10 {
            let streamed: Vec<_> = cycle_stream(n).unwrap().collect();
            assert_eq!(Listing::from_words(n, streamed).unwrap(), cycle_listing(n).unwrap(), "n = {n}");
        }
    }
}
