//! Closed-form tileability characterization and the 5/6 coin arithmetic
//! behind the width-5 strip constructions.

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::search::{self, SearchConfig, TileTable};

/// A representation n = 5*fives + 6*sixes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrobeniusRep {
    pub fives: u32,
    pub sixes: u32,
}

/// Some (i, j) with 5i + 6j = n, preferring maximal i (greedy on 5s).
///
/// Absent exactly for n in {1, 2, 3, 4, 7, 8, 9, 13, 14, 19}; 19 is the
/// Frobenius number of {5, 6}, so every n >= 20 is representable.
pub fn frobenius_rep(n: u32) -> Option<FrobeniusRep> {
    // 5i = n - 6j, so i is maximal when j is minimal; j only needs to range
    // over 0..5 since replacing five 6s by six 5s keeps the sum.
    for sixes in 0..5.min(n / 6 + 1) {
        let rest = n - 6 * sixes;
        if rest.is_multiple_of(5) {
            return Some(FrobeniusRep {
                fives: rest / 5,
                sixes,
            });
        }
    }
    None
}

/// Which characterization case produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    EvenEven,
    Row2Or4,
    Row3,
    Row5Frobenius,
    SmallTable,
    LargeTheorem,
    TooThin,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Rule::EvenEven => "even_even",
            Rule::Row2Or4 => "row2_or_4",
            Rule::Row3 => "row3",
            Rule::Row5Frobenius => "row5_frobenius",
            Rule::SmallTable => "small_table",
            Rule::LargeTheorem => "large_theorem",
            Rule::TooThin => "too_thin",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdict {
    pub tileable: bool,
    pub rule: Rule,
}

impl Verdict {
    fn new(tileable: bool, rule: Rule) -> Self {
        Verdict { tileable, rule }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TheoryError {
    #[error("rectangle dimensions must be at least 1, got {m}x{n}")]
    Degenerate { m: u32, n: u32 },
    #[error("the closed-form characterization only covers min_side = 2 (got {0}); use the search engine")]
    UnsupportedMinSide(u32),
}

/// The brute-force table for all dimensions below 20, generated by the
/// search (never hand-typed) on first use.
pub fn small_table() -> &'static TileTable {
    static TABLE: OnceLock<TileTable> = OnceLock::new();
    TABLE.get_or_init(|| search::build_table(19, &SearchConfig::default()))
}

/// Decide tileability of an m-by-n rectangle by squares of side >= 2 in
/// closed form (dimensions below 20 fall back to the generated brute-force
/// table). Symmetric in m and n.
pub fn decide_tileable(m: u32, n: u32) -> Result<Verdict, TheoryError> {
    decide_tileable_min_side(m, n, 2)
}

/// As [`decide_tileable`], rejecting any `min_side` other than 2 rather than
/// answering for the wrong problem.
pub fn decide_tileable_min_side(m: u32, n: u32, min_side: u32) -> Result<Verdict, TheoryError> {
    if min_side != 2 {
        return Err(TheoryError::UnsupportedMinSide(min_side));
    }
    if m < 1 || n < 1 {
        return Err(TheoryError::Degenerate { m, n });
    }
    let (m, n) = if m <= n { (m, n) } else { (n, m) };
    let verdict = match m {
        1 => Verdict::new(false, Rule::TooThin),
        2 | 4 => Verdict::new(n % 2 == 0, Rule::Row2Or4),
        3 => Verdict::new(n % 3 == 0, Rule::Row3),
        5 => Verdict::new(frobenius_rep(n).is_some(), Rule::Row5Frobenius),
        _ if m % 2 == 0 && n % 2 == 0 => Verdict::new(true, Rule::EvenEven),
        _ if m >= 20 => Verdict::new(true, Rule::LargeTheorem),
        _ if n >= 20 => Verdict::new(true, Rule::LargeTheorem),
        _ => Verdict::new(small_table().get(m, n), Rule::SmallTable),
    };
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frobenius_examples() {
        assert_eq!(frobenius_rep(19), None);
        assert_eq!(frobenius_rep(0), Some(FrobeniusRep { fives: 0, sixes: 0 }));
        assert_eq!(frobenius_rep(17), Some(FrobeniusRep { fives: 1, sixes: 2 }));
        assert_eq!(frobenius_rep(20), Some(FrobeniusRep { fives: 4, sixes: 0 }));
    }

    #[test]
    fn frobenius_gap_set() {
        let gaps: Vec<u32> = (0..20).filter(|&n| frobenius_rep(n).is_none()).collect();
        assert_eq!(gaps, vec![1, 2, 3, 4, 7, 8, 9, 13, 14, 19]);
        for n in 20..200 {
            let rep = frobenius_rep(n).expect("all n >= 20 are representable");
            assert_eq!(5 * rep.fives + 6 * rep.sixes, n);
        }
    }

    #[test]
    fn frobenius_prefers_fives() {
        // 30 = 5*6 = 6*5; the greedy tie-break picks six 5s.
        assert_eq!(frobenius_rep(30), Some(FrobeniusRep { fives: 6, sixes: 0 }));
    }

    #[test]
    fn decide_examples() {
        let d = |m, n| decide_tileable(m, n).unwrap();
        assert_eq!(d(2, 14), Verdict::new(true, Rule::Row2Or4));
        assert_eq!(d(3, 14), Verdict::new(false, Rule::Row3));
        assert_eq!(d(7, 11), Verdict::new(false, Rule::SmallTable));
        assert_eq!(d(7, 20), Verdict::new(true, Rule::LargeTheorem));
        assert!(d(10, 10).tileable);
        assert_eq!(d(1, 100), Verdict::new(false, Rule::TooThin));
    }

    #[test]
    fn degenerate_inputs_are_errors() {
        assert!(decide_tileable(0, 5).is_err());
        assert!(decide_tileable(5, 0).is_err());
        assert!(decide_tileable_min_side(5, 5, 3).is_err());
    }

    #[test]
    fn symmetry() {
        for m in 1..30 {
            for n in 1..30 {
                assert_eq!(
                    decide_tileable(m, n).unwrap().tileable,
                    decide_tileable(n, m).unwrap().tileable
                );
            }
        }
    }

    #[test]
    fn common_divisor_implies_tileable() {
        for m in 2..=60u32 {
            for n in 2..=60u32 {
                let has_common = (2..=m.min(n)).any(|d| m % d == 0 && n % d == 0);
                if has_common {
                    assert!(
                        decide_tileable(m, n).unwrap().tileable,
                        "{m}x{n} has a common divisor but was judged untileable"
                    );
                }
            }
        }
    }
}
