//! Domain types for rectangles, square placements, and tilings, plus an
//! independent verifier and the canonical text format.
//!
//! Coordinates are (x = column, y = row) with the origin at the top-left and
//! y growing downward.

use std::fmt;

use thiserror::Error;

/// An m-by-n integer rectangle: `m` rows (height) and `n` columns (width).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rect {
    pub m: u32,
    pub n: u32,
}

impl Rect {
    pub fn new(m: u32, n: u32) -> Self {
        Rect { m, n }
    }

    pub fn area(&self) -> u64 {
        u64::from(self.m) * u64::from(self.n)
    }

    /// The same rectangle with m <= n. Tileability is symmetric under
    /// transpose, so most code canonicalizes first.
    pub fn canonical(&self) -> Rect {
        if self.m <= self.n {
            *self
        } else {
            Rect::new(self.n, self.m)
        }
    }

    pub fn transpose(&self) -> Rect {
        Rect::new(self.n, self.m)
    }
}

impl fmt::Display for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.m, self.n)
    }
}

/// One axis-aligned square inside a host rectangle: covers the half-open
/// cell range [x, x+side) x [y, y+side).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Placement {
    pub x: u32,
    pub y: u32,
    pub side: u32,
}

impl Placement {
    pub fn new(x: u32, y: u32, side: u32) -> Self {
        Placement { x, y, side }
    }

    pub fn contains_cell(&self, cx: u32, cy: u32) -> bool {
        cx >= self.x && cx < self.x + self.side && cy >= self.y && cy < self.y + self.side
    }

    fn transpose(&self) -> Placement {
        Placement::new(self.y, self.x, self.side)
    }

    /// Sort key giving the canonical placement order.
    fn key(&self) -> (u32, u32) {
        (self.y, self.x)
    }
}

/// A rectangle together with a list of placements claimed to tile it.
///
/// The list is kept sorted by (y, x) so that equal tilings serialize to
/// byte-identical text. Construction does not validate geometry; that is
/// [`verify`]'s job.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tiling {
    pub rect: Rect,
    placements: Vec<Placement>,
}

impl Tiling {
    pub fn new(rect: Rect, mut placements: Vec<Placement>) -> Self {
        placements.sort_by_key(Placement::key);
        Tiling { rect, placements }
    }

    pub fn placements(&self) -> &[Placement] {
        &self.placements
    }

    pub fn into_placements(self) -> Vec<Placement> {
        self.placements
    }

    /// The n-by-m tiling with every placement's (x, y) swapped.
    pub fn transpose(&self) -> Tiling {
        Tiling::new(
            self.rect.transpose(),
            self.placements.iter().map(Placement::transpose).collect(),
        )
    }

    /// Canonical text form:
    ///
    /// ```text
    /// tiling <m> <n>
    /// <x> <y> <side>
    /// ...
    /// ```
    ///
    /// Placement lines are in (y, x)-sorted order, newline-terminated.
    pub fn to_text(&self) -> String {
        let mut out = format!("tiling {} {}\n", self.rect.m, self.rect.n);
        for p in &self.placements {
            out.push_str(&format!("{} {} {}\n", p.x, p.y, p.side));
        }
        out
    }

    /// Strict parser for the canonical text form. Rejects bad headers,
    /// malformed lines, and lines out of (y, x) order (which also rules out
    /// duplicate placements).
    pub fn from_text(text: &str) -> Result<Tiling, ParseError> {
        let mut lines = text.lines();
        let header = lines.next().ok_or(ParseError::MissingHeader)?;
        let mut parts = header.split(' ');
        if parts.next() != Some("tiling") {
            return Err(ParseError::BadHeader(header.to_string()));
        }
        let m = parse_field(parts.next(), header)?;
        let n = parse_field(parts.next(), header)?;
        if parts.next().is_some() || m == 0 || n == 0 {
            return Err(ParseError::BadHeader(header.to_string()));
        }

        let mut placements = Vec::new();
        let mut last_key: Option<(u32, u32)> = None;
        for (i, line) in lines.enumerate() {
            let lineno = i + 2;
            let fields: Vec<&str> = line.split(' ').collect();
            if fields.len() != 3 {
                return Err(ParseError::BadLine {
                    lineno,
                    line: line.to_string(),
                });
            }
            let parse = |s: &str| {
                s.parse::<u32>().map_err(|_| ParseError::BadLine {
                    lineno,
                    line: line.to_string(),
                })
            };
            let p = Placement::new(parse(fields[0])?, parse(fields[1])?, parse(fields[2])?);
            if let Some(prev) = last_key {
                if p.key() <= prev {
                    return Err(ParseError::OutOfOrder { lineno });
                }
            }
            last_key = Some(p.key());
            placements.push(p);
        }
        Ok(Tiling {
            rect: Rect::new(m, n),
            placements,
        })
    }
}

fn parse_field(field: Option<&str>, header: &str) -> Result<u32, ParseError> {
    field
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| ParseError::BadHeader(header.to_string()))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty input: missing `tiling <m> <n>` header")]
    MissingHeader,
    #[error("bad header line: {0:?}")]
    BadHeader(String),
    #[error("line {lineno}: malformed placement {line:?}")]
    BadLine { lineno: usize, line: String },
    #[error("line {lineno}: placements not in strict (y, x) order")]
    OutOfOrder { lineno: usize },
}

/// Why a tiling failed verification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Failure {
    /// Two placements cover a common cell.
    Overlap(Placement, Placement),
    /// A placement sticks out of the host rectangle.
    OutOfBounds(Placement),
    /// A cell (x, y) is covered by no placement.
    Gap(u32, u32),
    /// A placement's side is below the minimum.
    SideTooSmall(Placement),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Overlap(a, b) => write!(
                f,
                "OVERLAP between ({} {} {}) and ({} {} {})",
                a.x, a.y, a.side, b.x, b.y, b.side
            ),
            Failure::OutOfBounds(p) => {
                write!(f, "OUT_OF_BOUNDS placement ({} {} {})", p.x, p.y, p.side)
            }
            Failure::Gap(x, y) => write!(f, "GAP at cell ({x}, {y})"),
            Failure::SideTooSmall(p) => {
                write!(f, "SIDE_TOO_SMALL placement ({} {} {})", p.x, p.y, p.side)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerificationReport {
    pub valid: bool,
    pub failure: Option<Failure>,
}

impl VerificationReport {
    fn ok() -> Self {
        VerificationReport {
            valid: true,
            failure: None,
        }
    }

    fn fail(failure: Failure) -> Self {
        VerificationReport {
            valid: false,
            failure: Some(failure),
        }
    }
}

/// Check that `t`'s placements exactly partition its rectangle and that every
/// side is at least `min_side`, by painting a fresh coverage grid. Never
/// trusts the producer; any placement list is acceptable input.
///
/// A degenerate rectangle (m or n zero) never verifies.
pub fn verify(t: &Tiling, min_side: u32) -> VerificationReport {
    let Rect { m, n } = t.rect;
    if m == 0 || n == 0 {
        return VerificationReport::fail(Failure::Gap(0, 0));
    }

    // One bit per cell, row-major.
    let cells = t.rect.area() as usize;
    let mut covered = vec![0u64; cells.div_ceil(64)];

    for (i, &p) in t.placements.iter().enumerate() {
        if p.side < min_side {
            return VerificationReport::fail(Failure::SideTooSmall(p));
        }
        if u64::from(p.x) + u64::from(p.side) > u64::from(n)
            || u64::from(p.y) + u64::from(p.side) > u64::from(m)
        {
            return VerificationReport::fail(Failure::OutOfBounds(p));
        }
        for y in p.y..p.y + p.side {
            for x in p.x..p.x + p.side {
                let bit = y as usize * n as usize + x as usize;
                if covered[bit / 64] >> (bit % 64) & 1 != 0 {
                    // Find the earlier placement that painted this cell.
                    let prev = t.placements[..i]
                        .iter()
                        .copied()
                        .find(|q| q.contains_cell(x, y))
                        .expect("covered cell has an owner");
                    return VerificationReport::fail(Failure::Overlap(prev, p));
                }
                covered[bit / 64] |= 1 << (bit % 64);
            }
        }
    }

    for bit in 0..cells {
        if covered[bit / 64] >> (bit % 64) & 1 == 0 {
            let x = (bit % n as usize) as u32;
            let y = (bit / n as usize) as u32;
            return VerificationReport::fail(Failure::Gap(x, y));
        }
    }
    VerificationReport::ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiling(m: u32, n: u32, ps: &[(u32, u32, u32)]) -> Tiling {
        Tiling::new(
            Rect::new(m, n),
            ps.iter().map(|&(x, y, s)| Placement::new(x, y, s)).collect(),
        )
    }

    #[test]
    fn single_square_fills_2x2() {
        let t = tiling(2, 2, &[(0, 0, 2)]);
        assert!(verify(&t, 2).valid);
    }

    #[test]
    fn lemma_5x6_block_verifies() {
        // Two 3x3 squares on top, a row of three 2x2 squares below.
        let t = tiling(5, 6, &[(0, 0, 3), (3, 0, 3), (0, 3, 2), (2, 3, 2), (4, 3, 2)]);
        let r = verify(&t, 2);
        assert_eq!(r.failure, None);
        assert!(r.valid);
    }

    #[test]
    fn missing_quadrant_is_a_gap() {
        let t = tiling(4, 4, &[(0, 0, 2), (2, 0, 2), (0, 2, 2)]);
        let r = verify(&t, 2);
        assert_eq!(r.failure, Some(Failure::Gap(2, 2)));
    }

    #[test]
    fn overlapping_squares_rejected() {
        let t = tiling(3, 3, &[(0, 0, 3), (0, 0, 2)]);
        let r = verify(&t, 2);
        assert!(matches!(r.failure, Some(Failure::Overlap(_, _))));
    }

    #[test]
    fn side_below_minimum_rejected() {
        let t = tiling(2, 2, &[(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)]);
        let r = verify(&t, 2);
        assert!(matches!(r.failure, Some(Failure::SideTooSmall(_))));
    }

    #[test]
    fn out_of_bounds_rejected() {
        let t = tiling(3, 3, &[(1, 1, 3)]);
        let r = verify(&t, 2);
        assert!(matches!(r.failure, Some(Failure::OutOfBounds(_))));
    }

    #[test]
    fn degenerate_rect_never_verifies() {
        let t = tiling(0, 5, &[]);
        assert!(!verify(&t, 2).valid);
    }

    #[test]
    fn transpose_swaps_coordinates() {
        let t = tiling(2, 4, &[(0, 0, 2), (2, 0, 2)]);
        let tt = t.transpose();
        assert_eq!(tt.rect, Rect::new(4, 2));
        assert_eq!(
            tt.placements(),
            &[Placement::new(0, 0, 2), Placement::new(0, 2, 2)]
        );
        assert_eq!(tt.transpose(), t);
    }

    #[test]
    fn text_round_trip() {
        let t = tiling(5, 6, &[(0, 0, 3), (3, 0, 3), (0, 3, 2), (2, 3, 2), (4, 3, 2)]);
        let text = t.to_text();
        assert_eq!(text.lines().next(), Some("tiling 5 6"));
        assert_eq!(Tiling::from_text(&text).unwrap(), t);
    }

    #[test]
    fn parser_rejects_unsorted_lines() {
        let text = "tiling 2 4\n2 0 2\n0 0 2\n";
        assert!(matches!(
            Tiling::from_text(text),
            Err(ParseError::OutOfOrder { lineno: 3 })
        ));
    }

    #[test]
    fn parser_rejects_duplicates_and_bad_headers() {
        assert!(Tiling::from_text("tiling 2 2\n0 0 2\n0 0 2\n").is_err());
        assert!(Tiling::from_text("tilings 2 2\n").is_err());
        assert!(Tiling::from_text("tiling 2\n").is_err());
        assert!(Tiling::from_text("tiling 0 2\n").is_err());
        assert!(Tiling::from_text("").is_err());
        assert!(Tiling::from_text("tiling 2 2\n0 0\n").is_err());
    }
}
