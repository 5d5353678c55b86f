//! Guillotine reachability: which rectangle dimensions can be built by
//! repeatedly joining two smaller tilings along a full matching edge,
//! starting from single seed squares.
//!
//! Reachability is computed at the dimension level. That is sufficient
//! because joining any two valid tilings along a full matching edge always
//! yields a valid tiling; concrete witnesses are materialized on demand.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::search::{self, SearchConfig};
use crate::tiling::{Placement, Rect, Tiling};

/// Sides of the single-square tilings the join process starts from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedSet {
    sides: BTreeSet<u32>,
}

impl SeedSet {
    /// The four seeds of interest: 2, 3, 5, 7.
    pub fn paper_default() -> SeedSet {
        SeedSet::new([2, 3, 5, 7]).unwrap()
    }

    /// Every side from 2 up to `max`.
    pub fn all_up_to(max: u32) -> SeedSet {
        SeedSet::new(2..=max).unwrap()
    }

    pub fn new(sides: impl IntoIterator<Item = u32>) -> Option<SeedSet> {
        let sides: BTreeSet<u32> = sides.into_iter().collect();
        if sides.iter().all(|&s| s >= 2) {
            Some(SeedSet { sides })
        } else {
            None
        }
    }

    pub fn sides(&self) -> impl Iterator<Item = u32> + '_ {
        self.sides.iter().copied()
    }
}

impl Default for SeedSet {
    fn default() -> Self {
        SeedSet::paper_default()
    }
}

/// How an (m, n) dimension pair was first reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Provenance {
    Seed(u32),
    /// Stacked: an (h1, n) tiling above an (m - h1, n) tiling.
    HJoin(u32),
    /// Side by side: an (m, w1) tiling left of an (m, n - w1) tiling.
    VJoin(u32),
}

fn reachability(max_dim: u32, seeds: &SeedSet) -> BTreeMap<(u32, u32), Provenance> {
    let mut prov: BTreeMap<(u32, u32), Provenance> = BTreeMap::new();
    for k in seeds.sides().filter(|&k| k <= max_dim) {
        prov.insert((k, k), Provenance::Seed(k));
    }
    // Least fixed point; the rule set is monotone so a simple sweep-until-
    // stable suffices at this scale.
    loop {
        let mut added = Vec::new();
        let known: Vec<(u32, u32)> = prov.keys().copied().collect();
        for &(m, w1) in &known {
            for &(m2, w2) in &known {
                if m2 == m && w1 + w2 <= max_dim && !prov.contains_key(&(m, w1 + w2)) {
                    added.push(((m, w1 + w2), Provenance::VJoin(w1)));
                }
                if w2 == w1 && m + m2 <= max_dim && !prov.contains_key(&(m + m2, w1)) {
                    added.push(((m + m2, w1), Provenance::HJoin(m)));
                }
            }
        }
        if added.is_empty() {
            break;
        }
        for (k, v) in added {
            prov.entry(k).or_insert(v);
        }
    }
    prov
}

/// All (m, n) with m <= n <= max_dim reachable by guillotine joins from the
/// seed squares.
pub fn guillotine_closure(max_dim: u32, seeds: &SeedSet) -> BTreeSet<(u32, u32)> {
    reachability(max_dim, seeds)
        .keys()
        .filter(|&&(m, n)| m <= n)
        .copied()
        .collect()
}

/// Tileable pairs (per exhaustive search) that guillotine joins cannot
/// reach, canonical m <= n, ascending.
pub fn find_exceptions(max_dim: u32, seeds: &SeedSet) -> Vec<(u32, u32)> {
    let closure = guillotine_closure(max_dim, seeds);
    let table = search::build_table(max_dim, &SearchConfig::default());
    table
        .tileable_pairs()
        .into_iter()
        .filter(|p| !closure.contains(p))
        .collect()
}

/// A binary join tree: leaves are seed squares, internal nodes concatenate
/// two subtrees along a full matching edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JoinTree {
    Seed(u32),
    /// Top above bottom; equal widths.
    H(Box<JoinTree>, Box<JoinTree>),
    /// Left beside right; equal heights.
    V(Box<JoinTree>, Box<JoinTree>),
}

impl JoinTree {
    pub fn rect(&self) -> Rect {
        match self {
            JoinTree::Seed(k) => Rect::new(*k, *k),
            JoinTree::H(top, bottom) => {
                let (t, b) = (top.rect(), bottom.rect());
                debug_assert_eq!(t.n, b.n);
                Rect::new(t.m + b.m, t.n)
            }
            JoinTree::V(left, right) => {
                let (l, r) = (left.rect(), right.rect());
                debug_assert_eq!(l.m, r.m);
                Rect::new(l.m, l.n + r.n)
            }
        }
    }

    /// Materialize the tiling this tree describes.
    pub fn flatten(&self) -> Tiling {
        let mut placements = Vec::new();
        self.collect(0, 0, &mut placements);
        Tiling::new(self.rect(), placements)
    }

    fn collect(&self, dx: u32, dy: u32, out: &mut Vec<Placement>) {
        match self {
            JoinTree::Seed(k) => out.push(Placement::new(dx, dy, *k)),
            JoinTree::H(top, bottom) => {
                top.collect(dx, dy, out);
                bottom.collect(dx, dy + top.rect().m, out);
            }
            JoinTree::V(left, right) => {
                left.collect(dx, dy, out);
                right.collect(dx + left.rect().n, dy, out);
            }
        }
    }

    /// Nested parenthesized text: `(H a b)`, `(V a b)`, `S<k>`.
    pub fn to_text(&self) -> String {
        match self {
            JoinTree::Seed(k) => format!("S{k}"),
            JoinTree::H(a, b) => format!("(H {} {})", a.to_text(), b.to_text()),
            JoinTree::V(a, b) => format!("(V {} {})", a.to_text(), b.to_text()),
        }
    }
}

impl fmt::Display for JoinTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A join tree for the m-by-n rectangle, or None when joins cannot reach it.
pub fn guillotine_witness(m: u32, n: u32, seeds: &SeedSet) -> Option<JoinTree> {
    let max_dim = m.max(n);
    let prov = reachability(max_dim, seeds);
    build_tree(m, n, &prov)
}

fn build_tree(m: u32, n: u32, prov: &BTreeMap<(u32, u32), Provenance>) -> Option<JoinTree> {
    let tree = match *prov.get(&(m, n))? {
        Provenance::Seed(k) => JoinTree::Seed(k),
        Provenance::HJoin(h1) => JoinTree::H(
            Box::new(build_tree(h1, n, prov)?),
            Box::new(build_tree(m - h1, n, prov)?),
        ),
        Provenance::VJoin(w1) => JoinTree::V(
            Box::new(build_tree(m, w1, prov)?),
            Box::new(build_tree(m, n - w1, prov)?),
        ),
    };
    Some(tree)
}
