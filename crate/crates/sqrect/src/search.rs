//! Pruned backtracking search for square tilings of small rectangles.
//!
//! The strategy is fixed and deterministic: find the first uncovered cell in
//! row-major order; that cell must be the top-left corner of the next square
//! (nothing else can ever cover it); try side lengths in the configured order;
//! backtrack when no side fits.

use rayon::prelude::*;
use thiserror::Error;

use crate::tiling::{Placement, Rect, Tiling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SizeOrder {
    #[default]
    Ascending,
    Descending,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    /// Smallest allowed square side (the problem of interest has 2).
    pub min_side: u32,
    /// Largest allowed square side; defaults to min(m, n).
    pub max_side: Option<u32>,
    pub size_order: SizeOrder,
    /// Abort after this many placement attempts, reporting inconclusive.
    pub node_limit: Option<u64>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            min_side: 2,
            max_side: None,
            size_order: SizeOrder::Ascending,
            node_limit: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Tiling),
    NoTiling,
    /// The node limit was hit before the search space was exhausted. Never
    /// conflated with `NoTiling`.
    Inconclusive,
}

impl SearchOutcome {
    pub fn into_tiling(self) -> Option<Tiling> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }
}

/// Mutable cell-coverage state for the backtracking search. Row-major, one
/// bit per cell packed into words per row.
pub struct OccupancyGrid {
    rect: Rect,
    /// `words_per_row` u64 words per row; bit x of word x/64 is cell (x, y).
    rows: Vec<u64>,
    words_per_row: usize,
    covered: u64,
}

impl OccupancyGrid {
    pub fn new(rect: Rect) -> Self {
        let words_per_row = (rect.n as usize).div_ceil(64);
        OccupancyGrid {
            rect,
            rows: vec![0; words_per_row * rect.m as usize],
            words_per_row,
            covered: 0,
        }
    }

    pub fn covered_cells(&self) -> u64 {
        self.covered
    }

    fn is_covered(&self, x: u32, y: u32) -> bool {
        let w = &self.rows[y as usize * self.words_per_row + x as usize / 64];
        w >> (x % 64) & 1 != 0
    }

    fn set(&mut self, x: u32, y: u32, on: bool) {
        let w = &mut self.rows[y as usize * self.words_per_row + x as usize / 64];
        if on {
            *w |= 1 << (x % 64);
        } else {
            *w &= !(1 << (x % 64));
        }
    }

    /// First uncovered cell at or after `from` (row-major index), if any.
    fn first_uncovered(&self, from: usize) -> Option<(u32, u32)> {
        let n = self.rect.n as usize;
        let total = self.rect.area() as usize;
        let mut idx = from;
        while idx < total {
            let (x, y) = ((idx % n) as u32, (idx / n) as u32);
            if !self.is_covered(x, y) {
                return Some((x, y));
            }
            idx += 1;
        }
        None
    }

    /// Largest side s <= limit such that the s-by-s square at (x, y) fits the
    /// rectangle with every cell uncovered. Assumes (x, y) itself is free.
    fn max_free_side(&self, x: u32, y: u32, limit: u32) -> u32 {
        let geo = (self.rect.n - x).min(self.rect.m - y).min(limit);
        let mut s = 1;
        while s < geo {
            // Grow by one: new column x+s (rows y..=y+s) and new row y+s.
            let free = (y..=y + s).all(|cy| !self.is_covered(x + s, cy))
                && (x..x + s).all(|cx| !self.is_covered(cx, y + s));
            if !free {
                break;
            }
            s += 1;
        }
        s
    }

    fn place(&mut self, p: Placement) {
        for cy in p.y..p.y + p.side {
            for cx in p.x..p.x + p.side {
                self.set(cx, cy, true);
            }
        }
        self.covered += u64::from(p.side) * u64::from(p.side);
    }

    fn unplace(&mut self, p: Placement) {
        for cy in p.y..p.y + p.side {
            for cx in p.x..p.x + p.side {
                self.set(cx, cy, false);
            }
        }
        self.covered -= u64::from(p.side) * u64::from(p.side);
    }
}

struct Search {
    grid: OccupancyGrid,
    min_side: u32,
    max_side: u32,
    order: SizeOrder,
    node_limit: Option<u64>,
    nodes: u64,
    placements: Vec<Placement>,
}

enum Step {
    Solved,
    Exhausted,
    LimitHit,
}

impl Search {
    fn run(&mut self, scan_from: usize) -> Step {
        let (x, y) = match self.grid.first_uncovered(scan_from) {
            Some(cell) => cell,
            None => return Step::Solved,
        };
        let max = self.grid.max_free_side(x, y, self.max_side);
        if max < self.min_side {
            return Step::Exhausted;
        }
        let sides: Vec<u32> = match self.order {
            SizeOrder::Ascending => (self.min_side..=max).collect(),
            SizeOrder::Descending => (self.min_side..=max).rev().collect(),
        };
        let next_scan = y as usize * self.grid.rect.n as usize + x as usize;
        for side in sides {
            self.nodes += 1;
            if let Some(limit) = self.node_limit {
                if self.nodes > limit {
                    return Step::LimitHit;
                }
            }
            let p = Placement::new(x, y, side);
            self.grid.place(p);
            self.placements.push(p);
            match self.run(next_scan) {
                Step::Exhausted => {
                    self.placements.pop();
                    self.grid.unplace(p);
                }
                done => return done,
            }
        }
        Step::Exhausted
    }
}

/// Decide tileability of `rect` by exhaustive search and return a witness
/// tiling when one exists. Deterministic: identical inputs produce the
/// identical placement list.
pub fn find_tiling(rect: Rect, cfg: &SearchConfig) -> SearchOutcome {
    assert!(cfg.min_side >= 2, "min_side must be at least 2");
    if rect.m == 0 || rect.n == 0 {
        return SearchOutcome::NoTiling;
    }
    let geo_max = rect.m.min(rect.n);
    let max_side = cfg.max_side.unwrap_or(geo_max).min(geo_max);
    if max_side < cfg.min_side {
        return SearchOutcome::NoTiling;
    }
    let mut search = Search {
        grid: OccupancyGrid::new(rect),
        min_side: cfg.min_side,
        max_side,
        order: cfg.size_order,
        node_limit: cfg.node_limit,
        nodes: 0,
        placements: Vec::new(),
    };
    match search.run(0) {
        Step::Solved => SearchOutcome::Found(Tiling::new(rect, search.placements)),
        Step::Exhausted => SearchOutcome::NoTiling,
        Step::LimitHit => SearchOutcome::Inconclusive,
    }
}

/// Pure decision wrapper over [`find_tiling`] with no node limit.
pub fn is_tileable(rect: Rect, cfg: &SearchConfig) -> bool {
    let cfg = SearchConfig {
        node_limit: None,
        ..cfg.clone()
    };
    matches!(find_tiling(rect, &cfg), SearchOutcome::Found(_))
}

/// Tileability matrix for all 2 <= m, n <= max_dim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TileTable {
    max_dim: u32,
    min_side: u32,
    /// Row-major over m, n in 2..=max_dim.
    cells: Vec<bool>,
}

impl TileTable {
    pub fn max_dim(&self) -> u32 {
        self.max_dim
    }

    pub fn min_side(&self) -> u32 {
        self.min_side
    }

    pub fn get(&self, m: u32, n: u32) -> bool {
        assert!(
            (2..=self.max_dim).contains(&m) && (2..=self.max_dim).contains(&n),
            "({m}, {n}) outside table range 2..={}",
            self.max_dim
        );
        let dim = (self.max_dim - 1) as usize;
        self.cells[(m as usize - 2) * dim + (n as usize - 2)]
    }

    /// Canonical (m <= n) tileable pairs.
    pub fn tileable_pairs(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for m in 2..=self.max_dim {
            for n in m..=self.max_dim {
                if self.get(m, n) {
                    out.push((m, n));
                }
            }
        }
        out
    }

    /// Header line plus one row of `#`/`.` per m.
    pub fn to_text(&self) -> String {
        let mut out = format!("table {} min_side={}\n", self.max_dim, self.min_side);
        for m in 2..=self.max_dim {
            for n in 2..=self.max_dim {
                out.push(if self.get(m, n) { '#' } else { '.' });
            }
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<TileTable, TableParseError> {
        let mut lines = text.lines();
        let header = lines.next().ok_or(TableParseError::BadHeader)?;
        let rest = header
            .strip_prefix("table ")
            .ok_or(TableParseError::BadHeader)?;
        let (dim_s, min_s) = rest
            .split_once(" min_side=")
            .ok_or(TableParseError::BadHeader)?;
        let max_dim: u32 = dim_s.parse().map_err(|_| TableParseError::BadHeader)?;
        let min_side: u32 = min_s.parse().map_err(|_| TableParseError::BadHeader)?;
        if max_dim < 2 {
            return Err(TableParseError::BadHeader);
        }
        let dim = (max_dim - 1) as usize;
        let mut cells = Vec::with_capacity(dim * dim);
        for _ in 0..dim {
            let row = lines.next().ok_or(TableParseError::BadShape)?;
            if row.chars().count() != dim {
                return Err(TableParseError::BadShape);
            }
            for c in row.chars() {
                match c {
                    '#' => cells.push(true),
                    '.' => cells.push(false),
                    _ => return Err(TableParseError::BadCell(c)),
                }
            }
        }
        if lines.next().is_some() {
            return Err(TableParseError::BadShape);
        }
        Ok(TileTable {
            max_dim,
            min_side,
            cells,
        })
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableParseError {
    #[error("bad table header")]
    BadHeader,
    #[error("table body does not match header dimensions")]
    BadShape,
    #[error("unexpected table cell character {0:?}")]
    BadCell(char),
}

/// Compute the full tileability table for 2 <= m, n <= max_dim. Only m <= n
/// cells are searched; the rest are mirrored. Cells are independent and
/// evaluated in parallel.
pub fn build_table(max_dim: u32, cfg: &SearchConfig) -> TileTable {
    assert!(max_dim >= 2);
    let pairs: Vec<(u32, u32)> = (2..=max_dim)
        .flat_map(|m| (m..=max_dim).map(move |n| (m, n)))
        .collect();
    let verdicts: Vec<((u32, u32), bool)> = pairs
        .into_par_iter()
        .map(|(m, n)| ((m, n), is_tileable(Rect::new(m, n), cfg)))
        .collect();

    let dim = (max_dim - 1) as usize;
    let mut cells = vec![false; dim * dim];
    for ((m, n), v) in verdicts {
        cells[(m as usize - 2) * dim + (n as usize - 2)] = v;
        cells[(n as usize - 2) * dim + (m as usize - 2)] = v;
    }
    TileTable {
        max_dim,
        min_side: cfg.min_side,
        cells,
    }
}
