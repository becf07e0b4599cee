//! The six-line families with nodal singularities but a special dual: the
//! one-parameter family, the diagonal-coordinates family C(a, b, c), and the
//! rigid seed over Q(zeta_3); the unassuming predicate; the dual 15-line
//! arrangement; base points; matroid non-basis verification; and recovery of
//! the moduli invariant.
//!
//! An arrangement of six lines is *unassuming* when its own singularities are
//! 15 nodes while the 15 lines through pairs of its dual points have profile
//! t2=27, t3=6, t5=6, with the six dual points not on a conic. The moduli
//! space of such arrangements has two components: a one-dimensional family
//! parametrized (up to finite ambiguity) by t, and a rigid point.

use crate::arrangement::{lines_through, Arrangement, Mode, PointSet};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement, Q};
use crate::geom::{join, map_from_frame, meet, on_common_conic, triple_det, ProjMap, ProjPoint};
use itertools::Itertools;
use num_bigint::BigInt;

/// The six lines whose normals are the parameter matrix columns
/// (1,0,0), (0,1,0), (0,0,1), (1,1,1), (t+1, 1-t, 2), (1-t, t+1, 2).
///
/// Degenerate parameters are allowed and produce fewer lines (t = 0 collapses
/// columns five and six; t = +-1 gives the complete quadrilateral).
pub fn c0_of(t: &FieldElement) -> Result<Arrangement> {
    let field = t.field().clone();
    let one = field.one();
    let two = field.from_int(2);
    let tp1 = t.checked_add(&one)?;
    let omt = one.checked_sub(t)?;
    let normals = vec![
        [field.one(), field.zero(), field.zero()],
        [field.zero(), field.one(), field.zero()],
        [field.zero(), field.zero(), field.one()],
        [field.one(), field.one(), field.one()],
        [tp1.clone(), omt.clone(), two.clone()],
        [omt, tp1, two],
    ];
    let lines = normals
        .into_iter()
        .map(crate::geom::ProjLine::new)
        .collect::<Result<Vec<_>>>()?;
    Arrangement::new(field, lines)
}

/// The six lines with normals (0, a, 1), (0, -a, 1), (b, 0, 1), (-b, 0, 1),
/// (c, 1, 0), (-c, 1, 0); all three parameters must be nonzero.
pub fn c_abc(a: &FieldElement, b: &FieldElement, c: &FieldElement) -> Result<Arrangement> {
    if a.is_zero() || b.is_zero() || c.is_zero() {
        return Err(Error::InvalidArgument(
            "diagonal family parameters must be nonzero".into(),
        ));
    }
    let field = a.field().clone();
    if *b.field() != field || *c.field() != field {
        return Err(Error::FieldMismatch(
            "parameters from different fields".into(),
        ));
    }
    let normals = vec![
        [field.zero(), a.clone(), field.one()],
        [field.zero(), a.neg(), field.one()],
        [b.clone(), field.zero(), field.one()],
        [b.neg(), field.zero(), field.one()],
        [c.clone(), field.one(), field.zero()],
        [c.neg(), field.one(), field.zero()],
    ];
    let lines = normals
        .into_iter()
        .map(crate::geom::ProjLine::new)
        .collect::<Result<Vec<_>>>()?;
    Arrangement::new(field, lines)
}

/// The rigid unassuming arrangement over Q(zeta_3), with normals
/// (1,0,0), (0,1,0), (0,0,1), (1,1,1), (-j, j+1, 1), ((1-j)/3, (j+2)/3, 1)
/// where j is a primitive cube root of unity.
pub fn hesse_seed() -> Result<Arrangement> {
    let field = Field::cyclotomic(3)?;
    let q = |n: i64, d: i64| Q::new(BigInt::from(n), BigInt::from(d));
    let el = |c0: Q, c1: Q| field.from_coeffs(vec![c0, c1]).unwrap();
    let normals = vec![
        [field.one(), field.zero(), field.zero()],
        [field.zero(), field.one(), field.zero()],
        [field.zero(), field.zero(), field.one()],
        [field.one(), field.one(), field.one()],
        [el(q(0, 1), q(-1, 1)), el(q(1, 1), q(1, 1)), field.one()],
        [el(q(1, 3), q(-1, 3)), el(q(2, 3), q(1, 3)), field.one()],
    ];
    let lines = normals
        .into_iter()
        .map(crate::geom::ProjLine::new)
        .collect::<Result<Vec<_>>>()?;
    Arrangement::new(field, lines)
}

/// No three of the six lines are concurrent; equivalent to all fifteen
/// pairwise meets being distinct nodes.
fn six_lines_nodal(a: &Arrangement) -> bool {
    let lines = a.lines();
    for triple in (0..lines.len()).combinations(3) {
        let det = triple_det(
            lines[triple[0]].coords(),
            lines[triple[1]].coords(),
            lines[triple[2]].coords(),
        );
        if det.is_zero() {
            return false;
        }
    }
    true
}

/// The unassuming predicate: six lines, nodal, dual 15-line profile
/// t2=27, t3=6, t5=6, and the six dual points not on a common conic.
///
/// The dual profile is evaluated through its diagonal points: for a nodal
/// six-line arrangement the dual join lines are exactly 15, every dual point
/// is a 5-point, and the 45 meets of joins with disjoint index pairs have
/// multiplicity 2 or 3, so the profile condition reduces to having exactly
/// six triple diagonal points.
pub fn is_unassuming(a: &Arrangement) -> bool {
    if a.len() != 6 || !six_lines_nodal(a) {
        return false;
    }
    let duals: Vec<ProjPoint> = a.dual_points().points().to_vec();
    // Joins of the 6 dual points, indexed by their point pair.
    let mut joins = Vec::with_capacity(15);
    for i in 0..6 {
        for j in (i + 1)..6 {
            joins.push(((i, j), join(&duals[i], &duals[j]).expect("distinct points")));
        }
    }
    // Meets of joins with disjoint index pairs: 45 of them, grouped exactly.
    let mut diagonal = Vec::with_capacity(45);
    for x in 0..joins.len() {
        for y in (x + 1)..joins.len() {
            let (pi, li) = &joins[x];
            let (pj, lj) = &joins[y];
            if pi.0 == pj.0 || pi.0 == pj.1 || pi.1 == pj.0 || pi.1 == pj.1 {
                continue;
            }
            diagonal.push(meet(li, lj).expect("distinct lines"));
        }
    }
    debug_assert_eq!(diagonal.len(), 45);
    diagonal.sort_unstable();
    let mut triples = 0usize;
    let mut idx = 0;
    while idx < diagonal.len() {
        let mut end = idx + 1;
        while end < diagonal.len() && diagonal[end] == diagonal[idx] {
            end += 1;
        }
        match end - idx {
            1 => {}
            3 => triples += 1,
            _ => return false,
        }
        idx = end;
    }
    if triples != 6 {
        return false;
    }
    let six: [ProjPoint; 6] = duals.try_into().expect("six dual points");
    !on_common_conic(&six)
}

/// The 15 lines through at least two of the six dual points. Degenerate
/// inputs (fewer than 15 joins) are rejected.
pub fn dual_15(a: &Arrangement) -> Result<Arrangement> {
    if a.len() != 6 {
        return Err(Error::InvalidArgument("dual-15 needs six lines".into()));
    }
    let lines = lines_through(&a.dual_points(), 2, Mode::AtLeast)?;
    if lines.len() != 15 {
        return Err(Error::Degenerate(format!(
            "dual join arrangement has {} lines, expected 15",
            lines.len()
        )));
    }
    Ok(lines)
}

/// The 15 double points of the parameter family in closed form: the columns
/// of the fixed 3 x 15 matrix in the parameter t.
pub fn double_points_closed_form(t: &FieldElement) -> Result<PointSet> {
    let f = t.field().clone();
    let one = f.one();
    let tp1 = t.checked_add(&one)?; // t + 1
    let tm1 = t.checked_sub(&one)?; // t - 1
    let m2t = t.checked_mul(&f.from_int(-2))?; // -2t
    let z = || f.zero();
    let i = |n: i64| f.from_int(n);
    let cols: Vec<[FieldElement; 3]> = vec![
        [i(1), z(), z()],
        [z(), i(1), z()],
        [z(), z(), i(1)],
        [i(-1), i(-1), i(1)],
        [i(-1), z(), i(1)],
        [i(-1), i(1), z()],
        [z(), i(-1), i(1)],
        [z(), i(-2), tp1.clone()],
        [i(-2), z(), tp1.clone()],
        [i(2), z(), tm1.clone()],
        [tm1.clone(), tp1.clone(), z()],
        [z(), i(2), tm1.clone()],
        [tp1.clone(), tm1.clone(), m2t.clone()],
        [tm1.clone(), tp1.clone(), m2t],
        [tp1, tm1, z()],
    ];
    let points = cols
        .into_iter()
        .map(ProjPoint::new)
        .collect::<Result<Vec<_>>>()?;
    PointSet::new(f, points)
}

/// The three 4-points of A united with its image: the base points, common to
/// all iterates. Errors when the count differs from three.
pub fn base_points(a: &Arrangement) -> Result<[ProjPoint; 3]> {
    let image = a.lambda_op(2, 3)?;
    if image.is_empty() {
        return Err(Error::Degenerate("image is empty, no base points".into()));
    }
    let union = a.union(&image)?;
    let four = union.points_with_multiplicity(4, Mode::Exactly);
    let pts = four.points();
    if pts.len() != 3 {
        return Err(Error::Expectation(format!(
            "expected exactly 3 four-points, found {}",
            pts.len()
        )));
    }
    Ok([pts[0].clone(), pts[1].clone(), pts[2].clone()])
}

/// Matroid non-basis data over 15 labelled lines: listed triples are
/// concurrent, and every 3-subset of each quintuple is concurrent; all other
/// triples are bases. Indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonBasisSpec {
    pub triples: Vec<[usize; 3]>,
    pub quintuples: Vec<[usize; 5]>,
}

impl NonBasisSpec {
    pub fn new(triples: Vec<[usize; 3]>, quintuples: Vec<[usize; 5]>) -> Result<Self> {
        let spec = NonBasisSpec {
            triples,
            quintuples,
        };
        for t in &spec.triples {
            if t.iter().any(|&i| !(1..=15).contains(&i))
                || t[0] == t[1]
                || t[1] == t[2]
                || t[0] == t[2]
            {
                return Err(Error::InvalidArgument(format!("bad triple {t:?}")));
            }
        }
        for q in &spec.quintuples {
            if q.iter().any(|&i| !(1..=15).contains(&i)) {
                return Err(Error::InvalidArgument(format!("bad quintuple {q:?}")));
            }
        }
        Ok(spec)
    }

    /// All 1-based index triples required to be concurrent, sorted.
    fn concurrent_triples(&self) -> Vec<[usize; 3]> {
        let mut out: Vec<[usize; 3]> = Vec::new();
        for t in &self.triples {
            let mut s = *t;
            s.sort_unstable();
            out.push(s);
        }
        for q in &self.quintuples {
            for c in q.iter().copied().combinations(3) {
                let mut s = [c[0], c[1], c[2]];
                s.sort_unstable();
                out.push(s);
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// For each 1-based line index, the pair of quintuples containing it.
    fn quintuple_pairs(&self) -> Result<Vec<(usize, usize)>> {
        let mut pairs: Vec<Vec<usize>> = vec![Vec::new(); 16];
        for (qi, q) in self.quintuples.iter().enumerate() {
            for &i in q {
                pairs[i].push(qi);
            }
        }
        let mut out = Vec::with_capacity(15);
        for (i, found) in pairs.iter().enumerate().skip(1) {
            if found.len() != 2 {
                return Err(Error::InvalidArgument(format!(
                    "line {i} lies in {} quintuples, expected 2",
                    found.len()
                )));
            }
            out.push((found[0], found[1]));
        }
        Ok(out)
    }
}

/// The non-basis data of the one-dimensional component.
pub fn nb1() -> NonBasisSpec {
    NonBasisSpec::new(
        vec![
            [1, 5, 10],
            [2, 4, 13],
            [3, 9, 13],
            [5, 7, 8],
            [6, 11, 12],
            [12, 14, 15],
        ],
        shared_quintuples(),
    )
    .unwrap()
}

/// The non-basis data of the rigid component.
pub fn nb2() -> NonBasisSpec {
    NonBasisSpec::new(
        vec![
            [1, 3, 11],
            [1, 4, 14],
            [3, 8, 15],
            [4, 6, 8],
            [6, 11, 12],
            [12, 14, 15],
        ],
        shared_quintuples(),
    )
    .unwrap()
}

fn shared_quintuples() -> Vec<[usize; 5]> {
    vec![
        [1, 2, 8, 9, 12],
        [1, 6, 7, 13, 15],
        [2, 3, 5, 6, 14],
        [3, 4, 7, 10, 12],
        [4, 5, 9, 11, 15],
        [8, 10, 11, 13, 14],
    ]
}

fn concurrency_table(a: &Arrangement) -> Vec<bool> {
    // Indexed by the lexicographic rank of the 3-subset of line positions.
    let lines = a.lines();
    let mut out = Vec::with_capacity(455);
    for c in (0..lines.len()).combinations(3) {
        let det = triple_det(
            lines[c[0]].coords(),
            lines[c[1]].coords(),
            lines[c[2]].coords(),
        );
        out.push(det.is_zero());
    }
    out
}

fn triple_index(n: usize, i: usize, j: usize, k: usize) -> usize {
    // Rank of {i<j<k} among the lexicographic 3-subsets of 0..n.
    let c2 = |m: usize| if m < 2 { 0 } else { m * (m - 1) / 2 };
    let mut rank = 0;
    for a in 0..i {
        rank += c2(n - 1 - a);
    }
    for b in (i + 1)..j {
        rank += n - 1 - b;
    }
    rank + (k - j - 1)
}

/// Verify that under the given labeling (line order), exactly the listed
/// triples and quintuple-subtriples are concurrent.
pub fn check_nonbases(a: &Arrangement, spec: &NonBasisSpec) -> Result<bool> {
    if a.len() != 15 {
        return Err(Error::InvalidArgument(
            "non-basis check needs 15 lines".into(),
        ));
    }
    let table = concurrency_table(a);
    let expected = spec.concurrent_triples();
    for (pos, c) in (0..15usize).combinations(3).enumerate() {
        let key = [c[0] + 1, c[1] + 1, c[2] + 1];
        let should = expected.binary_search(&key).is_ok();
        if table[pos] != should {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Search for a relabeling of the 15 lines realizing the non-basis data.
///
/// The search is anchored on the correspondence between the six 5-points and
/// the six quintuples: each line lies in exactly two pencils, and each
/// labelled index lies in exactly two quintuples, so a bijection of
/// quintuples onto pencils forces the entire labeling, leaving at most 720
/// candidates to verify. Returns, when found, the permutation `perm` with
/// `perm[k]` the original index of the line labelled k+1.
pub fn find_labeling(a: &Arrangement, spec: &NonBasisSpec) -> Result<Option<Vec<usize>>> {
    if a.len() != 15 {
        return Err(Error::InvalidArgument(
            "labeling search needs 15 lines".into(),
        ));
    }
    let spec_pairs = spec.quintuple_pairs()?;
    if spec.quintuples.len() != 6 {
        return Err(Error::InvalidArgument("expected six quintuples".into()));
    }

    // Actual pencils: the lines through each 5-point.
    let five_points: Vec<ProjPoint> = a
        .singular_points()
        .into_iter()
        .filter(|&(_, m)| m == 5)
        .map(|(p, _)| p)
        .collect();
    if five_points.len() != 6 {
        return Ok(None);
    }
    let lines = a.lines();
    let mut pencils: Vec<Vec<usize>> = Vec::with_capacity(6);
    for p in &five_points {
        let members: Vec<usize> = (0..15)
            .filter(|&i| crate::geom::incident(p, &lines[i]))
            .collect();
        if members.len() != 5 {
            return Ok(None);
        }
        pencils.push(members);
    }
    // Pencil pair -> line index.
    let mut line_pencils: Vec<Vec<usize>> = vec![Vec::new(); 15];
    for (pi, members) in pencils.iter().enumerate() {
        for &l in members {
            line_pencils[l].push(pi);
        }
    }
    if line_pencils.iter().any(|v| v.len() != 2) {
        return Ok(None);
    }
    let mut pair_to_line = std::collections::BTreeMap::new();
    for (l, ps) in line_pencils.iter().enumerate() {
        let key = (ps[0].min(ps[1]), ps[0].max(ps[1]));
        pair_to_line.insert(key, l);
    }

    let table = concurrency_table(a);
    let expected = spec.concurrent_triples();

    for sigma in (0..6usize).permutations(6) {
        // sigma[q] = pencil assigned to spec quintuple q.
        let mut labeling = Vec::with_capacity(15);
        let mut ok = true;
        for &(qa, qb) in &spec_pairs {
            let key = (sigma[qa].min(sigma[qb]), sigma[qa].max(sigma[qb]));
            match pair_to_line.get(&key) {
                Some(&l) => labeling.push(l),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        // Full verification against the concurrency table.
        let mut pass = true;
        'outer: for i in 0..15 {
            for j in (i + 1)..15 {
                for k in (j + 1)..15 {
                    let mut orig = [labeling[i], labeling[j], labeling[k]];
                    orig.sort_unstable();
                    let actual = table[triple_index(15, orig[0], orig[1], orig[2])];
                    let should = expected.binary_search(&[i + 1, j + 1, k + 1]).is_ok();
                    if actual != should {
                        pass = false;
                        break 'outer;
                    }
                }
            }
        }
        if pass {
            return Ok(Some(labeling));
        }
    }
    Ok(None)
}

/// Moduli classification of a six-line arrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuliClass {
    /// The one-dimensional component; `value` carries the invariant.
    Family,
    /// The isolated component (the rigid arrangement).
    Rigid,
    /// Degenerate parameter or not unassuming at all.
    Degenerate,
}

#[derive(Clone, Debug)]
pub struct ModuliPoint {
    /// The invariant (t^2 + t^-2)/2 when the arrangement is in the family.
    pub value: Option<FieldElement>,
    pub class: ModuliClass,
}

/// The invariant of the family parameter: (t^2 + t^-2) / 2.
pub fn family_invariant(t: &FieldElement) -> Result<FieldElement> {
    let t2 = t.checked_mul(t)?;
    let half = t
        .field()
        .from_rational(Q::new(BigInt::from(1), BigInt::from(2)));
    t2.checked_add(&t2.inv()?)?.checked_mul(&half)
}

/// All frame normalizations of the arrangement matching the parameter
/// pattern, as (parameter, dual frame map) pairs.
///
/// For each ordered choice of four dual points mapped to the standard frame,
/// the images of the remaining two dual points are tested against the fifth
/// and sixth parameter columns (t+1 : 1-t : 2) and (1-t : t+1 : 2); a match
/// with a consistent t is recorded. Matching parameters across all frames
/// agree on the invariant; that is checked by [`moduli_invariant`].
pub fn c0_parameter_matches(a: &Arrangement) -> Result<Vec<(FieldElement, ProjMap)>> {
    if a.len() != 6 {
        return Err(Error::InvalidArgument(
            "pattern match needs six lines".into(),
        ));
    }
    let field = a.field().clone();
    let duals = a.dual_points();
    let d = duals.points();
    let std_frame = [
        ProjPoint::from_ints(&field, [1, 0, 0])?,
        ProjPoint::from_ints(&field, [0, 1, 0])?,
        ProjPoint::from_ints(&field, [0, 0, 1])?,
        ProjPoint::from_ints(&field, [1, 1, 1])?,
    ];
    let two = field.from_int(2);
    let one = field.one();
    let mut out = Vec::new();
    for perm in (0..6usize).permutations(4) {
        let frame = [
            d[perm[0]].clone(),
            d[perm[1]].clone(),
            d[perm[2]].clone(),
            d[perm[3]].clone(),
        ];
        let Ok(h) = map_from_frame(&frame, &std_frame) else {
            continue;
        };
        let rest: Vec<usize> = (0..6).filter(|i| !perm.contains(i)).collect();
        for (r5, r6) in [(rest[0], rest[1]), (rest[1], rest[0])] {
            let q5 = h.apply_point(&d[r5])?;
            let q6 = h.apply_point(&d[r6])?;
            // Column five: (t+1 : 1-t : 2); column six: (1-t : t+1 : 2).
            let Some((x5, y5)) = chart_scaled(&q5, &two) else {
                continue;
            };
            let Some((x6, y6)) = chart_scaled(&q6, &two) else {
                continue;
            };
            if x5.checked_add(&y5)? != two || x6.checked_add(&y6)? != two {
                continue;
            }
            let t5 = x5.checked_sub(&one)?;
            let t6 = y6.checked_sub(&one)?;
            if t5 == t6 {
                out.push((t5, h.clone()));
            }
        }
    }
    Ok(out)
}

/// Scale a point with nonzero last coordinate so that it equals `two`,
/// returning the first two scaled coordinates.
fn chart_scaled(p: &ProjPoint, two: &FieldElement) -> Option<(FieldElement, FieldElement)> {
    let c = p.coords();
    if c[2].is_zero() {
        return None;
    }
    let scale = two.checked_div(&c[2]).ok()?;
    Some((
        c[0].checked_mul(&scale).ok()?,
        c[1].checked_mul(&scale).ok()?,
    ))
}

/// Classify a six-line arrangement: degenerate, in the one-dimensional
/// family (with its invariant), or rigid.
pub fn moduli_invariant(a: &Arrangement) -> Result<ModuliPoint> {
    if a.len() != 6 || !is_unassuming(a) {
        return Ok(ModuliPoint {
            value: None,
            class: ModuliClass::Degenerate,
        });
    }
    let matches = c0_parameter_matches(a)?;
    if matches.is_empty() {
        return Ok(ModuliPoint {
            value: None,
            class: ModuliClass::Rigid,
        });
    }
    let mut value: Option<FieldElement> = None;
    for (t, _) in &matches {
        let v = family_invariant(t)?;
        match &value {
            None => value = Some(v),
            Some(prev) => {
                if *prev != v {
                    return Err(Error::Expectation(format!(
                        "inconsistent invariants {prev} vs {v} across frame matches"
                    )));
                }
            }
        }
    }
    Ok(ModuliPoint {
        value,
        class: ModuliClass::Family,
    })
}
