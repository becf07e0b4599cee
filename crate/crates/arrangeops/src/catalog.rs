//! Named arrangements and their recognition: the Ceva family, the complete
//! quadrilateral, the Hesse-related unions, and the degenerate-limit objects.
//!
//! Recognition is anchored rather than generic: the three pencil vertices are
//! located (the unique maximal-multiplicity triple for large inputs, a small
//! exhaustive search otherwise), mapped with one triple point to the standard
//! frame, and the pencil parameters are then tested exactly against roots of
//! unity. A successful recognition returns the witness projectivity, so the
//! result is certified, not heuristic.

use crate::arrangement::{lines_through, Arrangement, Mode, PointSet};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::geom::{incident, map_from_frame, ProjLine, ProjMap, ProjPoint};
use crate::unassuming::dual_15;
use itertools::Itertools;

/// The 3n lines x = wy, x = wz, y = wz over the n-th roots of unity w,
/// constructed over the n-th cyclotomic field.
pub fn ceva(n: u32) -> Result<Arrangement> {
    if n == 0 {
        return Err(Error::InvalidArgument("Ceva index must be >= 1".into()));
    }
    let field = Field::cyclotomic(n)?;
    let mut lines = Vec::with_capacity(3 * n as usize);
    for j in 0..n {
        let w = field.zeta_pow(j as i64)?;
        // x - w y = 0, x - w z = 0, y - w z = 0
        lines.push(ProjLine::new([field.one(), w.neg(), field.zero()])?);
        lines.push(ProjLine::new([field.one(), field.zero(), w.neg()])?);
        lines.push(ProjLine::new([field.zero(), field.one(), w.neg()])?);
    }
    Arrangement::new(field, lines)
}

/// Tag of a recognized catalog arrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogName {
    Ceva(u32),
    Quadrilateral,
    Hesse,
}

/// How the input relates to the recognized model.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Equal,
    Subset,
    None,
}

/// Outcome of a recognition attempt. When the relation is not `None`, the
/// witness carries the input into the canonical coordinates of the model.
#[derive(Clone, Debug)]
pub struct RecognitionResult {
    pub name: Option<CatalogName>,
    pub relation: Relation,
    pub witness: Option<ProjMap>,
}

impl RecognitionResult {
    fn none() -> Self {
        RecognitionResult {
            name: None,
            relation: Relation::None,
            witness: None,
        }
    }
}

/// Recognize the input as a Ceva arrangement or a subset of one, with the
/// minimal n, returning the witness map into the canonical coordinates.
pub fn recognize_ceva(a: &Arrangement) -> RecognitionResult {
    recognize_ceva_impl(a, None)
}

/// Check the input against a specific Ceva index n.
pub fn contained_in_ceva(a: &Arrangement, n: u32) -> RecognitionResult {
    recognize_ceva_impl(a, Some(n))
}

fn recognize_ceva_impl(a: &Arrangement, target: Option<u32>) -> RecognitionResult {
    if a.len() < 3 {
        return RecognitionResult::none();
    }
    if a.len() == 3 {
        return recognize_three_lines(a, target).unwrap_or_else(|_| RecognitionResult::none());
    }
    let Some(unit_bound) = a.field().roots_of_unity_order() else {
        return RecognitionResult::none();
    };
    let singular = a.singular_points();
    for verts in vertex_candidates(a, &singular) {
        if let Ok(Some(res)) = try_anchor(a, &singular, &verts, target, unit_bound) {
            return res;
        }
    }
    RecognitionResult::none()
}

/// Candidate vertex triples: the maximal-multiplicity points when exactly
/// three carry the maximum, otherwise (for small inputs) every triple of
/// singular points.
fn vertex_candidates(a: &Arrangement, singular: &[(ProjPoint, usize)]) -> Vec<[ProjPoint; 3]> {
    let max_mult = singular.iter().map(|&(_, m)| m).max().unwrap_or(0);
    let maxima: Vec<&ProjPoint> = singular
        .iter()
        .filter(|&&(_, m)| m == max_mult)
        .map(|(p, _)| p)
        .collect();
    if maxima.len() == 3 {
        return vec![[maxima[0].clone(), maxima[1].clone(), maxima[2].clone()]];
    }
    if a.len() <= 15 && singular.len() <= 40 {
        return singular
            .iter()
            .map(|(p, _)| p.clone())
            .combinations(3)
            .map(|c| [c[0].clone(), c[1].clone(), c[2].clone()])
            .collect();
    }
    Vec::new()
}

fn try_anchor(
    a: &Arrangement,
    singular: &[(ProjPoint, usize)],
    verts: &[ProjPoint; 3],
    target: Option<u32>,
    unit_bound: u32,
) -> Result<Option<RecognitionResult>> {
    // Pencil partition: every line passes through exactly one vertex.
    let mut pencil_of = Vec::with_capacity(a.len());
    for l in a.lines() {
        let mut hit = None;
        for (vi, v) in verts.iter().enumerate() {
            if incident(v, l) {
                if hit.is_some() {
                    return Ok(None);
                }
                hit = Some(vi);
            }
        }
        match hit {
            Some(vi) => pencil_of.push(vi),
            None => return Ok(None),
        }
    }
    for vi in 0..3 {
        if !pencil_of.contains(&vi) {
            return Ok(None);
        }
    }

    // A triple point away from the vertices with one line per pencil.
    let mut anchor = None;
    'points: for (p, m) in singular {
        if *m != 3 || verts.contains(p) {
            continue;
        }
        let mut seen = [false; 3];
        for (l, &pi) in a.lines().iter().zip(&pencil_of) {
            if incident(p, l) {
                if seen[pi] {
                    continue 'points;
                }
                seen[pi] = true;
            }
        }
        if seen.iter().all(|&s| s) {
            anchor = Some(p.clone());
            break;
        }
    }
    let Some(q) = anchor else {
        return Ok(None);
    };

    let field = a.field().clone();
    let src = [verts[0].clone(), verts[1].clone(), verts[2].clone(), q];
    let dst = [
        ProjPoint::from_ints(&field, [1, 0, 0])?,
        ProjPoint::from_ints(&field, [0, 1, 0])?,
        ProjPoint::from_ints(&field, [0, 0, 1])?,
        ProjPoint::from_ints(&field, [1, 1, 1])?,
    ];
    let Ok(h) = map_from_frame(&src, &dst) else {
        return Ok(None);
    };

    // Pencil parameters in canonical coordinates.
    let mut pencil_sizes = [0usize; 3];
    let mut orders: Vec<u32> = Vec::with_capacity(a.len());
    let check_order_bound = target.unwrap_or(unit_bound);
    for (l, &pi) in a.lines().iter().zip(&pencil_of) {
        pencil_sizes[pi] += 1;
        let lc = h.apply_line(l)?;
        let c = lc.coords();
        // Pencil through (1:0:0): y = w z; (0:1:0): x = w z; (0:0:1): x = w y.
        let w = match pi {
            0 => c[2].checked_div(&c[1])?.neg(),
            1 => c[2].checked_div(&c[0])?.neg(),
            _ => c[1].checked_div(&c[0])?.neg(),
        };
        match order_dividing(&w, check_order_bound)? {
            Some(d) => orders.push(d),
            None => return Ok(None),
        }
    }
    let n = match target {
        Some(n) => n,
        None => orders.iter().fold(1u32, |acc, &d| num_integer::lcm(acc, d)),
    };
    let relation = if a.len() == 3 * n as usize && pencil_sizes.iter().all(|&s| s == n as usize) {
        Relation::Equal
    } else {
        Relation::Subset
    };
    Ok(Some(RecognitionResult {
        name: Some(CatalogName::Ceva(n)),
        relation,
        witness: Some(h),
    }))
}

/// Smallest divisor d of `bound` with w^d = 1, if any.
fn order_dividing(w: &FieldElement, bound: u32) -> Result<Option<u32>> {
    if w.is_zero() {
        return Ok(None);
    }
    for d in 1..=bound {
        if bound.is_multiple_of(d) && w.pow(d as i64)?.is_one() {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

/// Three concurrent lines are projectively the n = 1 Ceva arrangement.
fn recognize_three_lines(a: &Arrangement, target: Option<u32>) -> Result<RecognitionResult> {
    if let Some(n) = target {
        if n != 1 {
            // Three lines can also sit inside a larger Ceva; only the
            // concurrent case is recognized here.
            return Ok(RecognitionResult::none());
        }
    }
    let lines = a.lines();
    let c = crate::geom::meet(&lines[0], &lines[1])?;
    if !incident(&c, &lines[2]) {
        return Ok(RecognitionResult::none());
    }
    let field = a.field().clone();
    // Pick one extra point on each line, avoiding the common point and
    // degenerate frames.
    let candidates: Vec<Vec<ProjPoint>> = lines
        .iter()
        .map(|l| points_on_line(l, 4))
        .collect::<Result<Vec<_>>>()?;
    let dst = [
        ProjPoint::from_ints(&field, [0, 0, 1])?,
        ProjPoint::from_ints(&field, [0, 1, 0])?,
        ProjPoint::from_ints(&field, [1, 0, 0])?,
        ProjPoint::from_ints(&field, [1, 1, 1])?,
    ];
    for p1 in &candidates[0] {
        if *p1 == c {
            continue;
        }
        for p2 in &candidates[1] {
            if *p2 == c {
                continue;
            }
            for p3 in &candidates[2] {
                if *p3 == c {
                    continue;
                }
                let src = [p1.clone(), p2.clone(), p3.clone(), c.clone()];
                if let Ok(h) = map_from_frame(&src, &dst) {
                    return Ok(RecognitionResult {
                        name: Some(CatalogName::Ceva(1)),
                        relation: Relation::Equal,
                        witness: Some(h),
                    });
                }
            }
        }
    }
    Ok(RecognitionResult::none())
}

/// A few distinct points on a line.
fn points_on_line(l: &ProjLine, how_many: usize) -> Result<Vec<ProjPoint>> {
    let c = l.coords();
    let field = l.field().clone();
    // Two independent points orthogonal to the normal.
    let raw = [
        [c[1].clone(), c[0].neg(), field.zero()],
        [c[2].clone(), field.zero(), c[0].neg()],
        [field.zero(), c[2].clone(), c[1].neg()],
    ];
    let mut span: Vec<ProjPoint> = Vec::new();
    for coords in raw {
        if let Ok(p) = ProjPoint::new(coords) {
            if !span.contains(&p) {
                span.push(p);
                if span.len() == 2 {
                    break;
                }
            }
        }
    }
    if span.len() < 2 {
        return Err(Error::Degenerate("line spans fewer than two points".into()));
    }
    let (u, v) = (span[0].clone(), span[1].clone());
    let mut out = vec![u.clone(), v.clone()];
    let mut k = 1i64;
    while out.len() < how_many {
        let scale = field.from_int(k);
        let coords = [
            &u.coords()[0] + &(&v.coords()[0] * &scale),
            &u.coords()[1] + &(&v.coords()[1] * &scale),
            &u.coords()[2] + &(&v.coords()[2] * &scale),
        ];
        if let Ok(p) = ProjPoint::new(coords) {
            if !out.contains(&p) {
                out.push(p);
            }
        }
        k += 1;
    }
    Ok(out)
}

/// The 21-line union of the dual 15-line arrangements of a rigid seed and
/// its image.
pub fn g26_union(a: &Arrangement) -> Result<Arrangement> {
    let image = a.lambda_op(2, 3)?;
    let d0 = dual_15(a)?;
    let d1 = dual_15(&image)?;
    let union = d0.union(&d1)?;
    if union.len() != 21 {
        return Err(Error::Expectation(format!(
            "reflection union has {} lines, expected 21",
            union.len()
        )));
    }
    Ok(union)
}

/// The degenerate-limit objects at parameter zero: the nine limit points of
/// the double points, their dual nine lines (fixed by the lines-through-two-
/// triple-points operator), and the thirteen lines through pairs of the nine
/// points.
pub fn limit_objects() -> Result<(PointSet, Arrangement, Arrangement)> {
    let field = Field::rational();
    let p9 = crate::unassuming::double_points_closed_form(&field.zero())?;
    let dual9 = p9.dual_lines()?;
    let l2 = lines_through(&p9, 2, Mode::AtLeast)?;
    Ok((p9, dual9, l2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::SingularityProfile;
    use crate::dynamics::{closed_form_orbit_union, galois_orbit_union};
    use crate::unassuming::hesse_seed;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn profile(pairs: &[(usize, usize)]) -> SingularityProfile {
        SingularityProfile::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn ceva_construction_profiles() {
        let c4 = ceva(4).unwrap();
        assert_eq!(c4.len(), 12);
        assert_eq!(c4.profile(), profile(&[(3, 16), (4, 3)]));

        let c3 = ceva(3).unwrap();
        assert_eq!(c3.len(), 9);
        assert_eq!(c3.profile(), profile(&[(3, 12)]));

        // n = 1: the defining product has three concurrent lines.
        let c1 = ceva(1).unwrap();
        assert_eq!(c1.len(), 3);
        assert_eq!(c1.profile(), profile(&[(3, 1)]));

        // n = 2 is the complete quadrilateral.
        let c2 = ceva(2).unwrap();
        assert_eq!(c2.profile(), profile(&[(2, 3), (3, 4)]));
    }

    #[test]
    fn ceva_profile_shape_for_larger_n() {
        for n in 4..=9u32 {
            let c = ceva(n).unwrap();
            let p = c.profile();
            assert_eq!(p.get(3), (n * n) as usize, "t3 of ceva({n})");
            assert_eq!(p.get(n as usize), 3, "t_n of ceva({n})");
            assert_eq!(p.total_points(), (n * n) as usize + 3);
            assert!(p.satisfies_pair_count(c.len()));
        }
    }

    #[test]
    fn self_recognition() {
        for n in 1..=12u32 {
            let c = ceva(n).unwrap();
            let rec = recognize_ceva(&c);
            assert_eq!(rec.relation, Relation::Equal, "ceva({n})");
            assert_eq!(rec.name, Some(CatalogName::Ceva(n)));
            // The witness certifies the identification: the transformed
            // input equals the canonical model over the same field.
            if n >= 2 {
                let h = rec.witness.unwrap();
                let moved = c.apply_map(&h).unwrap();
                let model = ceva_in_field(c.field(), n).unwrap();
                assert!(moved.set_equal(&model));
            }
        }
    }

    /// The canonical Ceva lines written over an arbitrary field containing
    /// the needed roots of unity (used to verify witnesses).
    fn ceva_in_field(field: &Field, n: u32) -> Result<Arrangement> {
        let model = ceva(n)?;
        model.embed_into(field).or_else(|_| {
            // Fall back: same field already.
            if model.field() == field {
                Ok(model)
            } else {
                Err(Error::Unsupported("no embedding for witness check".into()))
            }
        })
    }

    #[test]
    fn recognition_is_projectively_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for n in [3u32, 4, 5] {
            let c = ceva(n).unwrap();
            let field = c.field().clone();
            for _ in 0..3 {
                let g = loop {
                    let rows: [[i64; 3]; 3] =
                        std::array::from_fn(|_| std::array::from_fn(|_| rng.random_range(-3..=3)));
                    if let Ok(g) = ProjMap::from_int_rows(&field, rows) {
                        break g;
                    }
                };
                let moved = c.apply_map(&g).unwrap();
                let rec = recognize_ceva(&moved);
                assert_eq!(rec.relation, Relation::Equal);
                assert_eq!(rec.name, Some(CatalogName::Ceva(n)));
            }
        }
    }

    #[test]
    fn galois_union_is_a_ceva_arrangement() {
        // The conjugate-orbit union at a fifth root of unity is Ceva(10):
        // recognized intrinsically and equal as a set after embedding.
        let f5 = Field::cyclotomic(5).unwrap();
        let union = galois_orbit_union(&f5.generator()).unwrap();
        let rec = recognize_ceva(&union);
        assert_eq!(rec.relation, Relation::Equal);
        assert_eq!(rec.name, Some(CatalogName::Ceva(10)));

        let f10 = Field::cyclotomic(10).unwrap();
        let embedded = union.embed_into(&f10).unwrap();
        assert!(embedded.set_equal(&ceva(10).unwrap()));

        // A single orbit union (24 lines) is a proper subset of Ceva(10).
        let single = closed_form_orbit_union(&f5.generator()).unwrap();
        assert_eq!(single.len(), 24);
        let rec1 = recognize_ceva(&single);
        assert_eq!(rec1.relation, Relation::Subset);
        assert_eq!(rec1.name, Some(CatalogName::Ceva(10)));
        let rec2 = contained_in_ceva(&single, 10);
        assert_eq!(rec2.relation, Relation::Subset);

        // The subset witness is certified: the transformed lines all lie in
        // the canonical model.
        let h = rec1.witness.unwrap();
        let moved = single.apply_map(&h).unwrap().embed_into(&f10).unwrap();
        assert!(moved.subset_of(&ceva(10).unwrap()));
    }

    #[test]
    fn smaller_galois_unions() {
        let f3 = Field::cyclotomic(3).unwrap();
        let union3 = galois_orbit_union(&f3.generator()).unwrap();
        let rec = recognize_ceva(&union3);
        assert_eq!(rec.relation, Relation::Equal);
        assert_eq!(rec.name, Some(CatalogName::Ceva(6)));
        let f6 = Field::cyclotomic(6).unwrap();
        assert!(union3.embed_into(&f6).unwrap().set_equal(&ceva(6).unwrap()));

        // Order 7: the same equality holds literally in coordinates.
        let f7 = Field::cyclotomic(7).unwrap();
        let union7 = galois_orbit_union(&f7.generator()).unwrap();
        let f14 = Field::cyclotomic(14).unwrap();
        assert!(union7
            .embed_into(&f14)
            .unwrap()
            .set_equal(&ceva(14).unwrap()));
    }

    #[test]
    fn recognition_rejects_wrong_targets() {
        // A full Ceva(5) is not inside Ceva(7): its pencil parameters are
        // fifth roots, not seventh.
        let c5 = ceva(5).unwrap();
        assert_eq!(contained_in_ceva(&c5, 7).relation, Relation::None);
        // But it is trivially contained in itself and in Ceva(10).
        assert_eq!(contained_in_ceva(&c5, 5).relation, Relation::Equal);
        let rec10 = contained_in_ceva(&c5, 10);
        assert_eq!(rec10.relation, Relation::Subset);
    }

    #[test]
    fn hesse_union_is_not_sub_ceva() {
        let h = hesse_seed().unwrap();
        let union = h.union(&h.lambda_op(2, 3).unwrap()).unwrap();
        assert_eq!(union.profile(), profile(&[(2, 12), (4, 9)]));
        let rec = recognize_ceva(&union);
        assert_eq!(rec.relation, Relation::None);
    }

    #[test]
    fn g26_union_profile_and_swap() {
        let h = hesse_seed().unwrap();
        let union = g26_union(&h).unwrap();
        assert_eq!(union.len(), 21);
        assert_eq!(union.profile(), profile(&[(2, 36), (4, 9), (5, 12)]));

        // The dual operator of index (3, 2) swaps the two dual 15-line
        // arrangements.
        let image = h.lambda_op(2, 3).unwrap();
        let d0 = dual_15(&h).unwrap();
        let d1 = dual_15(&image).unwrap();
        assert!(d0.lambda_op(3, 2).unwrap().set_equal(&d1));
        assert!(d1.lambda_op(3, 2).unwrap().set_equal(&d0));
    }

    #[test]
    fn limit_objects_shapes() {
        let (p9, dual9, l2) = limit_objects().unwrap();
        assert_eq!(p9.len(), 9);
        assert_eq!(dual9.len(), 9);
        assert_eq!(l2.len(), 13);
        // The nine dual lines are reproduced by joining their points of
        // multiplicity at least three: the at-least composite fixes the
        // arrangement (the exactly-variant does not, since three of the
        // heavy points are 4-fold).
        let heavy = dual9.points_with_multiplicity(3, Mode::AtLeast);
        let fixed = lines_through(&heavy, 2, Mode::AtLeast).unwrap();
        assert!(fixed.set_equal(&dual9));
    }
}
