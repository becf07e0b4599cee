//! Line arrangements and the point/line operators on them.
//!
//! An [`Arrangement`] is an ordered list of distinct canonical lines; the
//! order carries the labeling, while set-level comparisons ignore it.
//! Singular points are computed exactly by grouping the pairwise meets by
//! canonical form, so a point arising from c line pairs has multiplicity m
//! with m(m-1)/2 = c.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::geom::{incident, join, meet, ProjLine, ProjMap, ProjPoint};
use itertools::Itertools;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::fmt;

/// Selects lines/points by exact or lower-bounded multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exactly,
    AtLeast,
}

/// A finite set of distinct projective lines over one field.
#[derive(Clone, PartialEq, Eq)]
pub struct Arrangement {
    field: Field,
    lines: Vec<ProjLine>,
}

/// A finite set of distinct projective points.
#[derive(Clone, PartialEq, Eq)]
pub struct PointSet {
    field: Field,
    points: Vec<ProjPoint>,
}

/// The multiset {t_k}: how many points lie on exactly k lines.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SingularityProfile {
    counts: BTreeMap<usize, usize>,
}

impl SingularityProfile {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let counts = pairs.into_iter().filter(|&(_, c)| c > 0).collect();
        SingularityProfile { counts }
    }

    pub fn get(&self, k: usize) -> usize {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &BTreeMap<usize, usize> {
        &self.counts
    }

    pub fn total_points(&self) -> usize {
        self.counts.values().sum()
    }

    /// Every pair of distinct lines meets exactly once, so the profile of an
    /// n-line arrangement must satisfy sum t_k * C(k,2) = C(n,2).
    pub fn satisfies_pair_count(&self, line_count: usize) -> bool {
        let pairs: usize = self.counts.iter().map(|(&k, &t)| t * k * (k - 1) / 2).sum();
        pairs == line_count * (line_count.max(1) - 1) / 2
    }
}

impl fmt::Display for SingularityProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.counts.is_empty() {
            return write!(f, "none");
        }
        let parts: Vec<String> = self
            .counts
            .iter()
            .map(|(k, t)| format!("t{k}={t}"))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl Arrangement {
    /// Build from lines, dropping canonical duplicates but keeping first
    /// occurrence order (which is the labeling).
    pub fn new(field: Field, lines: Vec<ProjLine>) -> Result<Self> {
        let mut seen: Vec<ProjLine> = Vec::with_capacity(lines.len());
        for l in lines {
            if *l.field() != field {
                return Err(Error::FieldMismatch(
                    "line not over the arrangement field".into(),
                ));
            }
            if !seen.contains(&l) {
                seen.push(l);
            }
        }
        Ok(Arrangement { field, lines: seen })
    }

    pub fn empty(field: Field) -> Self {
        Arrangement {
            field,
            lines: Vec::new(),
        }
    }

    pub fn from_int_normals(field: &Field, normals: &[[i64; 3]]) -> Result<Self> {
        let lines: Result<Vec<ProjLine>> = normals
            .iter()
            .map(|&n| ProjLine::from_ints(field, n))
            .collect();
        Arrangement::new(field.clone(), lines?)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn lines(&self) -> &[ProjLine] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// All singular points with their multiplicities (lines through them).
    pub fn singular_points(&self) -> Vec<(ProjPoint, usize)> {
        let n = self.lines.len();
        if n < 2 {
            return Vec::new();
        }
        let mut meets: Vec<ProjPoint> = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in (i + 1)..n {
                meets.push(meet(&self.lines[i], &self.lines[j]).expect("distinct lines"));
            }
        }
        meets.sort_unstable();
        let mut out = Vec::new();
        let mut idx = 0;
        while idx < meets.len() {
            let mut end = idx + 1;
            while end < meets.len() && meets[end] == meets[idx] {
                end += 1;
            }
            let pair_count = end - idx;
            out.push((meets[idx].clone(), multiplicity_from_pair_count(pair_count)));
            idx = end;
        }
        out
    }

    pub fn profile(&self) -> SingularityProfile {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for (_, m) in self.singular_points() {
            *counts.entry(m).or_insert(0) += 1;
        }
        SingularityProfile { counts }
    }

    /// The point operator: points lying on exactly (or at least) k lines.
    pub fn points_with_multiplicity(&self, k: usize, mode: Mode) -> PointSet {
        let points = self
            .singular_points()
            .into_iter()
            .filter(|&(_, m)| match mode {
                Mode::Exactly => m == k,
                Mode::AtLeast => m >= k,
            })
            .map(|(p, _)| p)
            .collect();
        PointSet {
            field: self.field.clone(),
            points,
        }
    }

    /// The composite operator: lines through exactly n of the exactly-m
    /// points of the arrangement.
    pub fn lambda_op(&self, m: usize, n: usize) -> Result<Arrangement> {
        let pts = self.points_with_multiplicity(m, Mode::Exactly);
        lines_through(&pts, n, Mode::Exactly)
    }

    /// Duality applied to the lines: the same triples read as points.
    pub fn dual_points(&self) -> PointSet {
        PointSet {
            field: self.field.clone(),
            points: self.lines.iter().map(crate::geom::dualize_line).collect(),
        }
    }

    pub fn union(&self, other: &Arrangement) -> Result<Arrangement> {
        if self.field != other.field {
            return Err(Error::FieldMismatch("union across fields".into()));
        }
        let mut lines = self.lines.clone();
        for l in &other.lines {
            if !lines.contains(l) {
                lines.push(l.clone());
            }
        }
        Ok(Arrangement {
            field: self.field.clone(),
            lines,
        })
    }

    /// Equality as unordered sets of lines.
    pub fn set_equal(&self, other: &Arrangement) -> bool {
        if self.field != other.field || self.lines.len() != other.lines.len() {
            return false;
        }
        let mut a = self.lines.clone();
        let mut b = other.lines.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }

    pub fn contains_line(&self, l: &ProjLine) -> bool {
        self.lines.contains(l)
    }

    /// Whether every line of `self` occurs in `other`.
    pub fn subset_of(&self, other: &Arrangement) -> bool {
        self.lines.iter().all(|l| other.contains_line(l))
    }

    /// All r-element sub-arrangements satisfying the predicate, enumerated in
    /// lexicographic order of line indices (evaluated in parallel, merged in
    /// order).
    pub fn subsets_with_property<F>(&self, r: usize, predicate: F) -> Vec<Arrangement>
    where
        F: Fn(&Arrangement) -> bool + Sync,
    {
        if r > self.lines.len() {
            return Vec::new();
        }
        let combos: Vec<Vec<usize>> = (0..self.lines.len()).combinations(r).collect();
        combos
            .into_par_iter()
            .filter_map(|idx| {
                let sub = Arrangement {
                    field: self.field.clone(),
                    lines: idx.iter().map(|&i| self.lines[i].clone()).collect(),
                };
                predicate(&sub).then_some(sub)
            })
            .collect()
    }

    /// Apply a projectivity to every line.
    pub fn apply_map(&self, g: &ProjMap) -> Result<Arrangement> {
        let lines: Result<Vec<ProjLine>> = self.lines.iter().map(|l| g.apply_line(l)).collect();
        Arrangement::new(self.field.clone(), lines?)
    }

    /// Map coordinates into a larger field.
    pub fn embed_into(&self, target: &Field) -> Result<Arrangement> {
        let lines: Result<Vec<ProjLine>> =
            self.lines.iter().map(|l| l.embed_into(target)).collect();
        Arrangement::new(target.clone(), lines?)
    }
}

impl fmt::Debug for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Arrangement of {} lines over {:?}:",
            self.lines.len(),
            self.field
        )?;
        for l in &self.lines {
            writeln!(f, "  {:?}", l)?;
        }
        Ok(())
    }
}

fn multiplicity_from_pair_count(c: usize) -> usize {
    // c = m(m-1)/2 for the number of line pairs through one point.
    let m = num_integer::Roots::sqrt(&(1 + 8 * c)).div_ceil(2);
    debug_assert_eq!(m * (m - 1) / 2, c, "non-triangular pair count {c}");
    m
}

impl PointSet {
    pub fn new(field: Field, points: Vec<ProjPoint>) -> Result<Self> {
        let mut seen: Vec<ProjPoint> = Vec::with_capacity(points.len());
        for p in points {
            if *p.field() != field {
                return Err(Error::FieldMismatch(
                    "point not over the set's field".into(),
                ));
            }
            if !seen.contains(&p) {
                seen.push(p);
            }
        }
        Ok(PointSet {
            field,
            points: seen,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.points.contains(p)
    }

    pub fn set_equal(&self, other: &PointSet) -> bool {
        if self.field != other.field || self.points.len() != other.points.len() {
            return false;
        }
        let mut a = self.points.clone();
        let mut b = other.points.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }

    /// Duality applied to the points: the same triples read as lines.
    pub fn dual_lines(&self) -> Result<Arrangement> {
        Arrangement::new(
            self.field.clone(),
            self.points.iter().map(crate::geom::dualize_point).collect(),
        )
    }

    /// The composite operator: points on exactly n of the lines through
    /// exactly m points of the set.
    pub fn psi_op(&self, m: usize, n: usize) -> Result<PointSet> {
        let lines = lines_through(self, m, Mode::Exactly)?;
        Ok(lines.points_with_multiplicity(n, Mode::Exactly))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PointSet({} points)", self.points.len())
    }
}

/// The line operator: lines containing exactly (or at least) k points of the
/// set. Candidate lines are the joins of point pairs, deduplicated before
/// incidence counting against the input set only. Requires k >= 2.
pub fn lines_through(points: &PointSet, k: usize, mode: Mode) -> Result<Arrangement> {
    if k < 2 {
        return Err(Error::InvalidArgument(
            "line operator needs multiplicity >= 2".into(),
        ));
    }
    let pts = points.points();
    let mut candidates: Vec<ProjLine> = Vec::new();
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            candidates.push(join(&pts[i], &pts[j]).expect("distinct points"));
        }
    }
    candidates.sort_unstable();
    candidates.dedup();
    let selected: Vec<ProjLine> = candidates
        .into_iter()
        .filter(|l| {
            let count = pts.iter().filter(|p| incident(p, l)).count();
            match mode {
                Mode::Exactly => count == k,
                Mode::AtLeast => count >= k,
            }
        })
        .collect();
    Arrangement::new(points.field().clone(), selected)
}
