//! Property reports for binary and permutation listings.
//!
//! Every check reads the listing directly and classifies consecutive pairs
//! with [`bitword::gap`](crate::bitword::gap) or
//! [`gilbreath::perm_gap`](crate::gilbreath::perm_gap); nothing here trusts the
//! construction that produced the listing.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitword::{gap_unchecked, BinaryWord, Gap};
use crate::gilbreath::{perm_gap_unchecked, Permutation};
use crate::listing::Listing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PropertyId {
    A1,
    A2,
    A3,
    A4,
    B1,
    B2,
    B3,
    B4,
    C1,
    C2,
    C3,
    C4,
    L1,
    L2,
    L3,
    P1,
    P2,
    P3,
    Q1,
    Q2,
    Q3,
    Coverage,
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PropertyId::Coverage => f.write_str("COVERAGE"),
            other => fmt::Debug::fmt(other, f),
        }
    }
}

/// Property families for binary listings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PropertySet {
    /// Odd-length induction hypothesis of the cycle construction.
    A,
    /// Even-length induction hypothesis of the cycle construction.
    B,
    /// Path listing properties.
    C,
    /// Cycle listing properties.
    L,
}

/// Property families for permutation listings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PermPropertySet {
    /// Image of the cycle listing: identity to `2134…n`.
    P,
    /// Image of the path listing: identity to its reversal.
    Q,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CheckOptions {
    /// Accept the A3/B3 pair in either order instead of `10…01` first.
    pub unordered_pairs: bool,
    /// Collect every counterexample instead of only the first.
    pub exhaustive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// 1-based listing position the failure is attributed to.
    pub position: usize,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub id: PropertyId,
    counterexamples: Vec<Counterexample>,
}

impl PropertyReport {
    fn new(id: PropertyId) -> Self {
        Self { id, counterexamples: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        self.counterexamples.first()
    }

    pub fn counterexamples(&self) -> &[Counterexample] {
        &self.counterexamples
    }
}

/// `<ID> PASS` or `<ID> FAIL @index=<i> <detail>`.
impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.counterexample() {
            None => write!(f, "{} PASS", self.id),
            Some(c) => write!(f, "{} FAIL @index={} {}", self.id, c.position, c.detail),
        }
    }
}

// Accumulates counterexamples, stopping after the first unless exhaustive.
struct Recorder {
    report: PropertyReport,
    exhaustive: bool,
}

impl Recorder {
    fn new(id: PropertyId, opts: &CheckOptions) -> Self {
        Self { report: PropertyReport::new(id), exhaustive: opts.exhaustive }
    }

    fn wants_more(&self) -> bool {
        self.exhaustive || self.report.counterexamples.is_empty()
    }

    fn fail(&mut self, position: usize, detail: String) {
        if self.wants_more() {
            self.report.counterexamples.push(Counterexample { position, detail });
        }
    }

    fn finish(self) -> PropertyReport {
        self.report
    }
}

/// Consecutive-pair gaps of a listing; `len() - 1` entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapProfile(pub Vec<Gap>);

impl GapProfile {
    pub fn as_slice(&self) -> &[Gap] {
        &self.0
    }
}

impl fmt::Display for GapProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

pub fn gap_profile(listing: &Listing) -> GapProfile {
    GapProfile(listing.iter().zip(listing.iter().skip(1)).map(|(u, v)| gap_unchecked(u, v)).collect())
}

enum Seen {
    Bits(Vec<u64>),
    Set(BTreeSet<u64>),
}

impl Seen {
    fn new(width: usize) -> Self {
        if width <= 32 {
            Seen::Bits(vec![0; (1usize << width).div_ceil(64)])
        } else {
            Seen::Set(BTreeSet::new())
        }
    }

    fn insert(&mut self, bits: u64) -> bool {
        match self {
            Seen::Bits(table) => {
                let (slot, bit) = ((bits / 64) as usize, bits % 64);
                let fresh = table[slot] & (1 << bit) == 0;
                table[slot] |= 1 << bit;
                fresh
            }
            Seen::Set(set) => set.insert(bits),
        }
    }
}

/// Passes iff the entries are pairwise distinct and there are exactly
/// `2^width` of them.
pub fn check_coverage(listing: &Listing) -> PropertyReport {
    check_coverage_with(listing, &CheckOptions::default())
}

pub fn check_coverage_with(listing: &Listing, opts: &CheckOptions) -> PropertyReport {
    let mut rec = Recorder::new(PropertyId::Coverage, opts);
    let width = listing.width();
    let mut seen = Seen::new(width);
    for (i, word) in listing.iter().enumerate() {
        if !seen.insert(word.bits()) {
            rec.fail(i + 1, format!("{word} repeated"));
            if !rec.wants_more() {
                break;
            }
        }
    }
    let expected = 1u128 << width;
    if listing.len() as u128 != expected {
        let position = (listing.len() as u128).min(expected) as usize + 1;
        rec.fail(position, format!("count {} != {expected}", listing.len()));
    }
    rec.finish()
}

fn word(width: usize, ones: &[usize]) -> Option<BinaryWord> {
    BinaryWord::with_ones_at(width, ones).ok()
}

fn check_endpoints(
    id: PropertyId,
    listing: &Listing,
    expected: &[(usize, Option<BinaryWord>)],
    opts: &CheckOptions,
) -> PropertyReport {
    let mut rec = Recorder::new(id, opts);
    for &(index, want) in expected {
        let got = listing.get(index);
        match (got, want) {
            (Some(g), Some(w)) if g == w => {}
            (got, want) => {
                let got = got.map_or(String::from("nothing"), |g| format!("{g}"));
                let want = want.map_or(String::from("an undefined word"), |w| format!("{w}"));
                rec.fail(index + 1, format!("expected {want}, found {got}"));
            }
        }
    }
    rec.finish()
}

fn check_gap_bounds(rec: &mut Recorder, listing: &Listing, gaps: &[Gap]) {
    for (i, g) in gaps.iter().enumerate() {
        if !matches!(g, Gap::One | Gap::Two) {
            let (u, v) = (listing.get(i).unwrap(), listing.get(i + 1).unwrap());
            rec.fail(i + 2, format!("gap({u}, {v}) = {g}"));
            if !rec.wants_more() {
                return;
            }
        }
    }
}

// The pair (g_{i-1}, g_i) for 2 <= i <= 2^n - 1: never both 2.
fn check_no_double_two(rec: &mut Recorder, gaps: &[Gap]) {
    for (i, pair) in gaps.windows(2).enumerate() {
        if pair[0] == Gap::Two && pair[1] == Gap::Two {
            rec.fail(i + 2, String::from("distance-2 jumps on both sides"));
            if !rec.wants_more() {
                return;
            }
        }
    }
}

fn check_pair(
    id: PropertyId,
    listing: &Listing,
    first: Option<BinaryWord>,
    second: Option<BinaryWord>,
    opts: &CheckOptions,
) -> PropertyReport {
    let mut rec = Recorder::new(id, opts);
    let (Some(first), Some(second)) = (first, second) else {
        rec.fail(1, format!("pair undefined for width {}", listing.width()));
        return rec.finish();
    };
    let found = listing
        .iter()
        .zip(listing.iter().skip(1))
        .any(|(u, v)| (u == first && v == second) || (opts.unordered_pairs && u == second && v == first));
    if !found {
        let order = if opts.unordered_pairs { "next to" } else { "immediately before" };
        rec.fail(1, format!("{first} never appears {order} {second}"));
    }
    rec.finish()
}

fn check_c4(listing: &Listing, gaps: &[Gap], opts: &CheckOptions) -> PropertyReport {
    let mut rec = Recorder::new(PropertyId::C4, opts);
    let width = listing.width();
    let Some(target) = word(width, &[width]) else {
        return rec.finish();
    };
    let last = listing.len().saturating_sub(1);
    for (t, w) in listing.iter().enumerate() {
        if w != target || t == last {
            continue;
        }
        if t == 0 {
            rec.fail(1, format!("{target} has no predecessor"));
        } else if gaps[t - 1] != Gap::One {
            rec.fail(t + 1, format!("gap to {target} from its predecessor is {}", gaps[t - 1]));
        }
    }
    rec.finish()
}

/// Evaluates each property of `set` on `listing`. Target words are derived
/// from the listing's width.
pub fn check_binary_properties(listing: &Listing, set: PropertySet, opts: &CheckOptions) -> Vec<PropertyReport> {
    use PropertyId::*;

    let n = listing.width();
    let len = listing.len();
    let gaps = gap_profile(listing).0;
    let last = len.saturating_sub(1);
    let zeros = word(n, &[]);
    let one_zeros = word(n, &[1]);
    let second_to_last = (last.saturating_sub(1), if n >= 3 { word(n, &[3]) } else { None });

    let bounds_and_doubles = |id| {
        let mut rec = Recorder::new(id, opts);
        check_gap_bounds(&mut rec, listing, &gaps);
        if rec.wants_more() {
            check_no_double_two(&mut rec, &gaps);
        }
        rec.finish()
    };
    let bounds = |id| {
        let mut rec = Recorder::new(id, opts);
        check_gap_bounds(&mut rec, listing, &gaps);
        rec.finish()
    };
    let doubles = |id| {
        let mut rec = Recorder::new(id, opts);
        check_no_double_two(&mut rec, &gaps);
        rec.finish()
    };
    let ends = |id| check_endpoints(id, listing, &[(0, zeros), (last, one_zeros)], opts);
    // 10…01 paired with 00…01 (odd levels) or 001…01 (even levels).
    let corner = if n >= 2 { word(n, &[1, n]) } else { None };

    match set {
        PropertySet::L => vec![ends(L1), bounds(L2), doubles(L3)],
        PropertySet::A => vec![
            ends(A1),
            bounds_and_doubles(A2),
            check_pair(A3, listing, corner, if n >= 2 { word(n, &[n]) } else { None }, opts),
            check_endpoints(A4, listing, &[second_to_last], opts),
        ],
        PropertySet::B => vec![
            ends(B1),
            bounds_and_doubles(B2),
            check_pair(B3, listing, corner, if n >= 4 { word(n, &[3, n]) } else { None }, opts),
            check_endpoints(B4, listing, &[second_to_last], opts),
        ],
        PropertySet::C => vec![
            check_endpoints(C1, listing, &[(0, zeros), (1, one_zeros), (last, BinaryWord::ones(n).ok())], opts),
            bounds(C2),
            doubles(C3),
            check_c4(listing, &gaps, opts),
        ],
    }
}

/// Evaluates P1–P3 or Q1–Q3 on a permutation listing.
pub fn check_perm_properties(
    listing: &[Permutation],
    set: PermPropertySet,
    opts: &CheckOptions,
) -> Vec<PropertyReport> {
    let (ids, tail): ([PropertyId; 3], fn(usize) -> Permutation) = match set {
        PermPropertySet::P => ([PropertyId::P1, PropertyId::P2, PropertyId::P3], Permutation::cycle_end),
        PermPropertySet::Q => ([PropertyId::Q1, PropertyId::Q2, PropertyId::Q3], Permutation::reversal),
    };

    let mut ends = Recorder::new(ids[0], opts);
    match (listing.first(), listing.last()) {
        (Some(first), Some(last)) => {
            let size = first.len();
            let identity = Permutation::identity(size);
            if *first != identity {
                ends.fail(1, format!("expected {identity}, found {first}"));
            }
            let want = tail(size);
            if *last != want {
                ends.fail(listing.len(), format!("expected {want}, found {last}"));
            }
        }
        _ => ends.fail(1, String::from("empty listing")),
    }

    let mut gaps = Vec::with_capacity(listing.len().saturating_sub(1));
    let mut bounds = Recorder::new(ids[1], opts);
    for (i, pair) in listing.windows(2).enumerate() {
        let g = if pair[0].len() == pair[1].len() { perm_gap_unchecked(&pair[0], &pair[1]) } else { Gap::More };
        if !matches!(g, Gap::One | Gap::Two) {
            bounds.fail(i + 2, format!("gap({}, {}) = {g}", pair[0], pair[1]));
        }
        gaps.push(g);
    }
    let mut doubles = Recorder::new(ids[2], opts);
    check_no_double_two(&mut doubles, &gaps);

    vec![ends.finish(), bounds.finish(), doubles.finish()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use Gap::*;

    fn l(s: &str) -> Listing {
        Listing::parse(s).unwrap()
    }

    const L2: &str = "00 01 11 10";
    const L3: &str = "000 010 110 011 111 101 001 100";
    const M3: &str = "000 100 010 110 101 001 011 111";

    fn all_pass(reports: &[PropertyReport]) -> bool {
        reports.iter().all(PropertyReport::passed)
    }

    #[test]
    fn coverage_examples() {
        assert!(check_coverage(&l(L3)).passed());
        let dup = check_coverage(&l("00 00 01 11"));
        assert_eq!(dup.counterexample().unwrap().position, 2);
        let short = check_coverage(&l("00 01 11"));
        assert!(!short.passed());
        assert!(short.counterexample().unwrap().detail.contains("count 3 != 4"));
        assert_eq!(short.to_string(), "COVERAGE FAIL @index=4 count 3 != 4");
    }

    #[test]
    fn coverage_exhaustive_mode_reports_everything() {
        let opts = CheckOptions { exhaustive: true, ..Default::default() };
        let r = check_coverage_with(&l("00 00 00 11 11"), &opts);
        let positions: Vec<_> = r.counterexamples().iter().map(|c| c.position).collect();
        assert_eq!(positions, [2, 3, 5, 5]);
    }

    // Profiles frozen from the breadth-first oracle on G(2) and G(3).
    #[test]
    fn gap_profile_examples() {
        assert_eq!(gap_profile(&l(L2)).0, [Two, One, Two]);
        assert_eq!(gap_profile(&l(L3)).0, [Two, One, Two, One, Two, One, Two]);
        assert_eq!(gap_profile(&l(M3)).0, [One, One, One, One, One, Two, One]);
        assert_eq!(gap_profile(&l(M3)).to_string(), "1 1 1 1 1 2 1");
    }

    #[test]
    fn base_listings_pass_their_sets() {
        let opts = CheckOptions::default();
        assert!(all_pass(&check_binary_properties(&l(L3), PropertySet::A, &opts)));
        assert!(all_pass(&check_binary_properties(&l(L3), PropertySet::L, &opts)));
        assert!(all_pass(&check_binary_properties(&l(L2), PropertySet::L, &opts)));
        assert!(all_pass(&check_binary_properties(&l(M3), PropertySet::C, &opts)));
    }

    #[test]
    fn broken_endpoint_fails_l1() {
        let r = check_binary_properties(&l("00 01 10 11"), PropertySet::L, &CheckOptions::default());
        assert_eq!(r[0].id, PropertyId::L1);
        assert!(!r[0].passed());
        assert_eq!(r[0].counterexample().unwrap().position, 4);
    }

    #[test]
    fn pair_order_flag() {
        // 001 before 101: ordered A3 fails, unordered passes.
        let swapped = l("000 010 110 011 111 001 101 100");
        let ordered = check_binary_properties(&swapped, PropertySet::A, &CheckOptions::default());
        assert!(!ordered[2].passed());
        let opts = CheckOptions { unordered_pairs: true, ..Default::default() };
        assert!(check_binary_properties(&swapped, PropertySet::A, &opts)[2].passed());
    }

    #[test]
    fn consecutive_two_gaps_are_caught() {
        let bad = l("000 010 101 001 100 110 011 111");
        let g = gap_profile(&bad).0;
        assert_eq!(&g[..2], [Two, Two]);
        let r = check_binary_properties(&bad, PropertySet::C, &CheckOptions::default());
        assert_eq!(r[2].id, PropertyId::C3);
        assert_eq!(r[2].counterexample().unwrap().position, 2);
    }

    #[test]
    fn c4_needs_unit_gap_before_last_position_word() {
        // 001 reached by a distance-2 jump.
        let bad = l("000 100 010 110 001 101 011 111");
        let r = check_binary_properties(&bad, PropertySet::C, &CheckOptions::default());
        assert_eq!(r[3].id, PropertyId::C4);
        assert!(!r[3].passed());
    }

    #[test]
    fn perm_endpoints() {
        let p = |s: &str| s.parse::<Permutation>().unwrap();
        let list = [p("123"), p("213")];
        let r = check_perm_properties(&list, PermPropertySet::P, &CheckOptions::default());
        assert!(all_pass(&r));
        let rev: Vec<_> = list.iter().rev().cloned().collect();
        let r = check_perm_properties(&rev, PermPropertySet::P, &CheckOptions::default());
        assert!(!r[0].passed());
        assert!(r[1].passed());
    }

    #[test]
    fn report_rendering() {
        assert_eq!(PropertyId::Coverage.to_string(), "COVERAGE");
        assert_eq!(PropertyId::L3.to_string(), "L3");
        assert_eq!(PropertyReport::new(PropertyId::C2).to_string(), "C2 PASS");
    }
}
