//! Exact projective-plane primitives: points, lines, incidence, join/meet,
//! projectivities, cross-ratios, conics, and point/line duality.
//!
//! Points and lines are homogeneous coordinate triples over a [`Field`],
//! stored in the canonical normalization where the first nonzero coordinate
//! is 1. Two triples represent the same point or line exactly when their
//! canonical forms are identical, which makes canonical coordinates usable
//! as exact sort keys.

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use std::cmp::Ordering;
use std::fmt;

/// Canonical homogeneous coordinate triple.
#[derive(Clone, PartialEq, Eq)]
pub struct HomTriple {
    coords: [FieldElement; 3],
}

impl HomTriple {
    fn new(coords: [FieldElement; 3]) -> Result<Self> {
        let field = coords[0].field().clone();
        if coords.iter().any(|c| *c.field() != field) {
            return Err(Error::FieldMismatch(
                "coordinates from different fields".into(),
            ));
        }
        let pivot = coords
            .iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| Error::InvalidArgument("zero coordinate triple".into()))?;
        let inv = coords[pivot].inv()?;
        let normalized = [
            coords[0].checked_mul(&inv)?,
            coords[1].checked_mul(&inv)?,
            coords[2].checked_mul(&inv)?,
        ];
        Ok(HomTriple { coords: normalized })
    }

    pub fn coords(&self) -> &[FieldElement; 3] {
        &self.coords
    }

    pub fn field(&self) -> &Field {
        self.coords[0].field()
    }
}

impl PartialOrd for HomTriple {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HomTriple {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coords
            .iter()
            .zip(other.coords.iter())
            .map(|(a, b)| a.cmp(b))
            .find(|o| *o != Ordering::Equal)
            .unwrap_or(Ordering::Equal)
    }
}

impl fmt::Debug for HomTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} : {} : {})",
            self.coords[0], self.coords[1], self.coords[2]
        )
    }
}

macro_rules! proj_entity {
    ($name:ident) => {
        #[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
        pub struct $name(pub(crate) HomTriple);

        impl $name {
            pub fn new(coords: [FieldElement; 3]) -> Result<Self> {
                Ok($name(HomTriple::new(coords)?))
            }

            /// Convenience constructor from small integers.
            pub fn from_ints(field: &Field, coords: [i64; 3]) -> Result<Self> {
                Self::new([
                    field.from_int(coords[0]),
                    field.from_int(coords[1]),
                    field.from_int(coords[2]),
                ])
            }

            pub fn coords(&self) -> &[FieldElement; 3] {
                self.0.coords()
            }

            pub fn field(&self) -> &Field {
                self.0.field()
            }

            /// Map coordinates into a larger field.
            pub fn embed_into(&self, target: &Field) -> Result<Self> {
                let c = self.coords();
                Self::new([
                    c[0].embed_into(target)?,
                    c[1].embed_into(target)?,
                    c[2].embed_into(target)?,
                ])
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}{:?}", stringify!($name), self.0)
            }
        }
    };
}

proj_entity!(ProjPoint);
proj_entity!(ProjLine);

fn cross(a: &[FieldElement; 3], b: &[FieldElement; 3]) -> [FieldElement; 3] {
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

/// Exact incidence: sum of coordinate products vanishes.
pub fn incident(p: &ProjPoint, l: &ProjLine) -> bool {
    let pc = p.coords();
    let lc = l.coords();
    let mut acc = &(&pc[0] * &lc[0]) + &(&pc[1] * &lc[1]);
    acc = &acc + &(&pc[2] * &lc[2]);
    acc.is_zero()
}

/// The line through two distinct points.
pub fn join(p: &ProjPoint, q: &ProjPoint) -> Result<ProjLine> {
    if p == q {
        return Err(Error::Degenerate("join of equal points".into()));
    }
    ProjLine::new(cross(p.coords(), q.coords()))
}

/// The intersection point of two distinct lines.
pub fn meet(l: &ProjLine, m: &ProjLine) -> Result<ProjPoint> {
    if l == m {
        return Err(Error::Degenerate("meet of equal lines".into()));
    }
    ProjPoint::new(cross(l.coords(), m.coords()))
}

/// Duality: the same coordinate triple read as the other kind of object.
pub fn dualize_point(p: &ProjPoint) -> ProjLine {
    ProjLine(p.0.clone())
}

pub fn dualize_line(l: &ProjLine) -> ProjPoint {
    ProjPoint(l.0.clone())
}

/// A projectivity of the plane, acting on points by matrix application.
#[derive(Clone, Debug)]
pub struct ProjMap {
    rows: [[FieldElement; 3]; 3],
}

impl ProjMap {
    pub fn new(rows: [[FieldElement; 3]; 3]) -> Result<Self> {
        let m = ProjMap { rows };
        if m.det().is_zero() {
            return Err(Error::Degenerate("singular projectivity matrix".into()));
        }
        Ok(m)
    }

    pub fn from_int_rows(field: &Field, rows: [[i64; 3]; 3]) -> Result<Self> {
        let conv = |r: [i64; 3]| {
            [
                field.from_int(r[0]),
                field.from_int(r[1]),
                field.from_int(r[2]),
            ]
        };
        ProjMap::new([conv(rows[0]), conv(rows[1]), conv(rows[2])])
    }

    pub fn identity(field: &Field) -> Self {
        ProjMap::from_int_rows(field, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap()
    }

    pub fn rows(&self) -> &[[FieldElement; 3]; 3] {
        &self.rows
    }

    pub fn det(&self) -> FieldElement {
        det3(&self.rows)
    }

    pub fn apply_point(&self, p: &ProjPoint) -> Result<ProjPoint> {
        let c = p.coords();
        let mut out: Vec<FieldElement> = Vec::with_capacity(3);
        for row in &self.rows {
            let mut acc = &(&row[0] * &c[0]) + &(&row[1] * &c[1]);
            acc = &acc + &(&row[2] * &c[2]);
            out.push(acc);
        }
        ProjPoint::new([out[0].clone(), out[1].clone(), out[2].clone()])
    }

    /// Lines transform by the inverse transpose so incidence is preserved.
    pub fn apply_line(&self, l: &ProjLine) -> Result<ProjLine> {
        let inv = self.inverse()?;
        let c = l.coords();
        let mut out: Vec<FieldElement> = Vec::with_capacity(3);
        for j in 0..3 {
            // column j of inv = row j of inv^T
            let mut acc = &(&inv.rows[0][j] * &c[0]) + &(&inv.rows[1][j] * &c[1]);
            acc = &acc + &(&inv.rows[2][j] * &c[2]);
            out.push(acc);
        }
        ProjLine::new([out[0].clone(), out[1].clone(), out[2].clone()])
    }

    pub fn compose(&self, inner: &ProjMap) -> Result<ProjMap> {
        let field = self.rows[0][0].field();
        let mut rows: Vec<[FieldElement; 3]> = Vec::with_capacity(3);
        for i in 0..3 {
            let mut row = Vec::with_capacity(3);
            for j in 0..3 {
                let mut acc = field.zero();
                for k in 0..3 {
                    acc = &acc + &(&self.rows[i][k] * &inner.rows[k][j]);
                }
                row.push(acc);
            }
            rows.push([row[0].clone(), row[1].clone(), row[2].clone()]);
        }
        ProjMap::new([rows[0].clone(), rows[1].clone(), rows[2].clone()])
    }

    pub fn inverse(&self) -> Result<ProjMap> {
        let d = self.det();
        if d.is_zero() {
            return Err(Error::Degenerate("singular matrix".into()));
        }
        let dinv = d.inv()?;
        let m = &self.rows;
        let minor = |r: usize, c: usize| -> FieldElement {
            let rs: Vec<usize> = (0..3).filter(|&i| i != r).collect();
            let cs: Vec<usize> = (0..3).filter(|&j| j != c).collect();
            &(&m[rs[0]][cs[0]] * &m[rs[1]][cs[1]]) - &(&m[rs[0]][cs[1]] * &m[rs[1]][cs[0]])
        };
        // inv[i][j] = (-1)^(i+j) * minor(j, i) / det
        let mut rows: Vec<[FieldElement; 3]> = Vec::with_capacity(3);
        for i in 0..3 {
            let mut row = Vec::with_capacity(3);
            for j in 0..3 {
                let mut entry = minor(j, i);
                if (i + j) % 2 == 1 {
                    entry = entry.neg();
                }
                row.push(entry.checked_mul(&dinv)?);
            }
            rows.push([row[0].clone(), row[1].clone(), row[2].clone()]);
        }
        ProjMap::new([rows[0].clone(), rows[1].clone(), rows[2].clone()])
    }
}

fn det3(m: &[[FieldElement; 3]; 3]) -> FieldElement {
    let t1 = &m[0][0] * &(&(&m[1][1] * &m[2][2]) - &(&m[1][2] * &m[2][1]));
    let t2 = &m[0][1] * &(&(&m[1][0] * &m[2][2]) - &(&m[1][2] * &m[2][0]));
    let t3 = &m[0][2] * &(&(&m[1][0] * &m[2][1]) - &(&m[1][1] * &m[2][0]));
    &(&t1 - &t2) + &t3
}

/// Determinant of the 3x3 matrix whose rows are the given triples; zero
/// exactly when the three lines are concurrent (or points collinear).
pub fn triple_det(
    a: &[FieldElement; 3],
    b: &[FieldElement; 3],
    c: &[FieldElement; 3],
) -> FieldElement {
    det3(&[a.clone(), b.clone(), c.clone()])
}

/// The unique projectivity sending one projective frame to another.
///
/// Both quadruples must be in general position (no three collinear).
pub fn map_from_frame(src: &[ProjPoint; 4], dst: &[ProjPoint; 4]) -> Result<ProjMap> {
    let a = frame_to_std(src)?;
    let b = frame_to_std(dst)?;
    b.compose(&a.inverse()?)
}

/// Matrix sending the standard frame e1, e2, e3, (1:1:1) to the given one.
fn frame_to_std(pts: &[ProjPoint; 4]) -> Result<ProjMap> {
    // Solve [p1 | p2 | p3] lambda = p4.
    let cols: Vec<&[FieldElement; 3]> = pts.iter().take(3).map(|p| p.coords()).collect();
    let rhs = pts[3].coords();
    let mat = [
        [cols[0][0].clone(), cols[1][0].clone(), cols[2][0].clone()],
        [cols[0][1].clone(), cols[1][1].clone(), cols[2][1].clone()],
        [cols[0][2].clone(), cols[1][2].clone(), cols[2][2].clone()],
    ];
    let lambda = solve3(&mat, rhs)
        .ok_or_else(|| Error::Degenerate("frame points not in general position".into()))?;
    if lambda.iter().any(FieldElement::is_zero) {
        return Err(Error::Degenerate(
            "frame points not in general position".into(),
        ));
    }
    let mut rows: Vec<[FieldElement; 3]> = Vec::with_capacity(3);
    for i in 0..3 {
        rows.push([
            cols[0][i].checked_mul(&lambda[0])?,
            cols[1][i].checked_mul(&lambda[1])?,
            cols[2][i].checked_mul(&lambda[2])?,
        ]);
    }
    ProjMap::new([rows[0].clone(), rows[1].clone(), rows[2].clone()])
}

/// Solve a 3x3 linear system exactly; `None` when the matrix is singular.
fn solve3(m: &[[FieldElement; 3]; 3], rhs: &[FieldElement; 3]) -> Option<[FieldElement; 3]> {
    let d = det3(m);
    if d.is_zero() {
        return None;
    }
    // Cramer's rule.
    let mut out = Vec::with_capacity(3);
    for j in 0..3 {
        let mut mj = m.clone();
        for i in 0..3 {
            mj[i][j] = rhs[i].clone();
        }
        out.push(det3(&mj).checked_div(&d).ok()?);
    }
    Some([out[0].clone(), out[1].clone(), out[2].clone()])
}

/// Decompose `p` as alpha * u + beta * v for points u, v spanning its line.
fn decompose_on_line(
    p: &ProjPoint,
    u: &ProjPoint,
    v: &ProjPoint,
) -> Result<(FieldElement, FieldElement)> {
    let (pu, pv, pp) = (u.coords(), v.coords(), p.coords());
    for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
        let det = &(&pu[i] * &pv[j]) - &(&pu[j] * &pv[i]);
        if det.is_zero() {
            continue;
        }
        let alpha = &(&pp[i] * &pv[j]) - &(&pp[j] * &pv[i]);
        let beta = &(&pu[i] * &pp[j]) - &(&pu[j] * &pp[i]);
        let dinv = det.inv()?;
        return Ok((alpha.checked_mul(&dinv)?, beta.checked_mul(&dinv)?));
    }
    Err(Error::Degenerate("basis points coincide".into()))
}

/// Cross-ratio of four distinct collinear points in the convention where the
/// first two points chart to 0 and infinity and cr(0, inf; 1, lambda) = lambda.
pub fn cross_ratio(
    p1: &ProjPoint,
    p2: &ProjPoint,
    p3: &ProjPoint,
    p4: &ProjPoint,
) -> Result<FieldElement> {
    let pts = [p1, p2, p3, p4];
    for i in 0..4 {
        for j in (i + 1)..4 {
            if pts[i] == pts[j] {
                return Err(Error::Degenerate("cross-ratio of coincident points".into()));
            }
        }
    }
    let line = join(p1, p2)?;
    if !incident(p3, &line) || !incident(p4, &line) {
        return Err(Error::Degenerate(
            "cross-ratio of non-collinear points".into(),
        ));
    }
    let (a3, b3) = decompose_on_line(p3, p1, p2)?;
    let (a4, b4) = decompose_on_line(p4, p1, p2)?;
    // Chart parameter t = beta/alpha has t(p1) = 0, t(p2) = inf; the Moebius
    // map fixing 0, inf and sending t(p3) to 1 takes t(p4) to the value below.
    let num = b4.checked_mul(&a3)?;
    let den = a4.checked_mul(&b3)?;
    num.checked_div(&den)
}

/// The cross-ratio orbit {lambda, 1/lambda} of two unordered pairs, invariant
/// under swaps within each pair. Returned sorted for set comparison.
pub fn cross_ratio_pairs(
    a: (&ProjPoint, &ProjPoint),
    b: (&ProjPoint, &ProjPoint),
) -> Result<[FieldElement; 2]> {
    let lambda = cross_ratio(a.0, a.1, b.0, b.1)?;
    let inv = lambda.inv()?;
    Ok(if lambda <= inv {
        [lambda, inv]
    } else {
        [inv, lambda]
    })
}

/// A conic, as the six coefficients of x^2, y^2, z^2, xy, xz, yz (canonical
/// scaling: first nonzero coefficient is 1).
#[derive(Clone, PartialEq, Eq)]
pub struct Conic {
    sym: Vec<FieldElement>,
}

impl Conic {
    pub fn coefficients(&self) -> &[FieldElement] {
        &self.sym
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        let row = veronese_row(p);
        let mut acc = p.field().zero();
        for (c, v) in self.sym.iter().zip(row.iter()) {
            acc = &acc + &(c * v);
        }
        acc.is_zero()
    }
}

impl fmt::Debug for Conic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Conic[x2={}, y2={}, z2={}, xy={}, xz={}, yz={}]",
            self.sym[0], self.sym[1], self.sym[2], self.sym[3], self.sym[4], self.sym[5]
        )
    }
}

fn veronese_row(p: &ProjPoint) -> [FieldElement; 6] {
    let c = p.coords();
    [
        &c[0] * &c[0],
        &c[1] * &c[1],
        &c[2] * &c[2],
        &c[0] * &c[1],
        &c[0] * &c[2],
        &c[1] * &c[2],
    ]
}

/// The conic through five points whose Veronese system has rank 5.
pub fn conic_through(pts: &[ProjPoint; 5]) -> Result<Conic> {
    let field = pts[0].field().clone();
    let rows: Vec<Vec<FieldElement>> = pts.iter().map(|p| veronese_row(p).to_vec()).collect();
    let ns = nullspace(&rows, &field)?;
    if ns.len() != 1 {
        return Err(Error::Degenerate(format!(
            "5-point conic system has nullity {}",
            ns.len()
        )));
    }
    let v = &ns[0];
    let pivot = v
        .iter()
        .position(|c| !c.is_zero())
        .ok_or_else(|| Error::Degenerate("zero conic".into()))?;
    let inv = v[pivot].inv()?;
    let sym: Vec<FieldElement> = v.iter().map(|c| c.checked_mul(&inv).unwrap()).collect();
    Ok(Conic { sym })
}

/// Whether six points lie on a common conic: the 6x6 Veronese determinant
/// vanishes.
pub fn on_common_conic(pts: &[ProjPoint; 6]) -> bool {
    let rows: Vec<Vec<FieldElement>> = pts.iter().map(|p| veronese_row(p).to_vec()).collect();
    det_n(&rows).is_zero()
}

/// Gaussian-elimination determinant for small square systems.
fn det_n(rows: &[Vec<FieldElement>]) -> FieldElement {
    let n = rows.len();
    let field = rows[0][0].field().clone();
    let mut m: Vec<Vec<FieldElement>> = rows.to_vec();
    let mut det = field.one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero());
        let Some(pr) = pivot else {
            return field.zero();
        };
        if pr != col {
            m.swap(pr, col);
            det = det.neg();
        }
        let pv = m[col][col].clone();
        det = det.checked_mul(&pv).unwrap();
        let pinv = pv.inv().unwrap();
        for r in (col + 1)..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].checked_mul(&pinv).unwrap();
            for c in col..n {
                let delta = factor.checked_mul(&m[col][c]).unwrap();
                m[r][c] = m[r][c].checked_sub(&delta).unwrap();
            }
        }
    }
    det
}

/// Nullspace basis of an m x n system by Gaussian elimination.
fn nullspace(rows: &[Vec<FieldElement>], field: &Field) -> Result<Vec<Vec<FieldElement>>> {
    let m = rows.len();
    let n = rows[0].len();
    let mut a: Vec<Vec<FieldElement>> = rows.to_vec();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut rank = 0usize;
    for col in 0..n {
        let pivot = (rank..m).find(|&r| !a[r][col].is_zero());
        let Some(pr) = pivot else { continue };
        a.swap(pr, rank);
        let pinv = a[rank][col].inv()?;
        for c in 0..n {
            a[rank][c] = a[rank][c].checked_mul(&pinv)?;
        }
        for r in 0..m {
            if r != rank && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in 0..n {
                    let delta = factor.checked_mul(&a[rank][c])?;
                    a[r][c] = a[r][c].checked_sub(&delta)?;
                }
            }
        }
        pivots.push((rank, col));
        rank += 1;
        if rank == m {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in 0..n {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![field.zero(); n];
        v[free] = field.one();
        for &(r, c) in &pivots {
            v[c] = a[r][free].neg();
        }
        basis.push(v);
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;
    use num_bigint::BigInt;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn fq() -> Field {
        Field::rational()
    }

    fn pt(c: [i64; 3]) -> ProjPoint {
        ProjPoint::from_ints(&fq(), c).unwrap()
    }

    fn ln(c: [i64; 3]) -> ProjLine {
        ProjLine::from_ints(&fq(), c).unwrap()
    }

    #[test]
    fn incidence_examples() {
        assert!(incident(&pt([0, 1, 0]), &ln([1, 0, 0])));
        assert!(incident(&pt([1, 1, 1]), &ln([1, -1, 0])));
        assert!(!incident(&pt([1, 0, 0]), &ln([1, 1, 1])));
    }

    #[test]
    fn join_meet_examples() {
        assert_eq!(join(&pt([1, 0, 0]), &pt([0, 1, 0])).unwrap(), ln([0, 0, 1]));
        assert_eq!(meet(&ln([1, 0, 0]), &ln([0, 1, 0])).unwrap(), pt([0, 0, 1]));
        assert_eq!(
            meet(&ln([0, 1, 1]), &ln([0, 1, -1])).unwrap(),
            pt([1, 0, 0])
        );
        assert!(join(&pt([1, 2, 3]), &pt([2, 4, 6])).is_err());
    }

    #[test]
    fn normalization_is_idempotent_and_scale_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let field = fq();
        for _ in 0..100 {
            let raw: [i64; 3] = [
                rng.random_range(-9..=9),
                rng.random_range(-9..=9),
                rng.random_range(-9..=9),
            ];
            if raw.iter().all(|&c| c == 0) {
                continue;
            }
            let scalar = loop {
                let s = rng.random_range(-9..=9i64);
                if s != 0 {
                    break s;
                }
            };
            let p = ProjPoint::from_ints(&field, raw).unwrap();
            let scaled = ProjPoint::new([
                &p.coords()[0] * &field.from_int(scalar),
                &p.coords()[1] * &field.from_int(scalar),
                &p.coords()[2] * &field.from_int(scalar),
            ])
            .unwrap();
            assert_eq!(p, scaled);
            let renorm = ProjPoint::new(p.coords().clone()).unwrap();
            assert_eq!(p, renorm);
        }
    }

    #[test]
    fn dualize_is_involutive() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let raw: [i64; 3] = [
                rng.random_range(-9..=9),
                rng.random_range(-9..=9),
                rng.random_range(-9..=9),
            ];
            if raw.iter().all(|&c| c == 0) {
                continue;
            }
            let p = pt(raw);
            assert_eq!(dualize_line(&dualize_point(&p)), p);
        }
    }

    #[test]
    fn join_meet_duality_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for _ in 0..50 {
            let a: [i64; 3] = std::array::from_fn(|_| rng.random_range(-7..=7));
            let b: [i64; 3] = std::array::from_fn(|_| rng.random_range(-7..=7));
            if a.iter().all(|&c| c == 0) || b.iter().all(|&c| c == 0) {
                continue;
            }
            let (Ok(l), Ok(m)) = (ProjLine::from_ints(&fq(), a), ProjLine::from_ints(&fq(), b))
            else {
                continue;
            };
            if l == m {
                continue;
            }
            let lhs = dualize_point(&meet(&l, &m).unwrap());
            let rhs = join(&dualize_line(&l), &dualize_line(&m)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn frame_maps() {
        let std_frame = [pt([1, 0, 0]), pt([0, 1, 0]), pt([0, 0, 1]), pt([1, 1, 1])];
        let id = map_from_frame(&std_frame, &std_frame).unwrap();
        for p in &std_frame {
            assert_eq!(id.apply_point(p).unwrap(), *p);
        }

        // A permuted frame maps by the permutation matrix.
        let perm = [pt([0, 1, 0]), pt([0, 0, 1]), pt([1, 0, 0]), pt([1, 1, 1])];
        let m = map_from_frame(&std_frame, &perm).unwrap();
        assert_eq!(m.apply_point(&pt([1, 0, 0])).unwrap(), pt([0, 1, 0]));
        assert_eq!(m.apply_point(&pt([1, 1, 1])).unwrap(), pt([1, 1, 1]));

        // Degenerate quadruple: three collinear points.
        let bad = [pt([1, 0, 0]), pt([0, 1, 0]), pt([1, 1, 0]), pt([1, 1, 1])];
        assert!(map_from_frame(&bad, &std_frame).is_err());
    }

    #[test]
    fn projectivities_preserve_incidence_and_cross_ratio() {
        let field = fq();
        let g = ProjMap::from_int_rows(&field, [[2, 1, 0], [1, 1, 1], [0, 3, 1]]).unwrap();
        let base = [pt([0, 1, 1]), pt([0, 1, -1]), pt([0, 1, 2]), pt([0, 1, 5])];
        let cr = cross_ratio(&base[0], &base[1], &base[2], &base[3]).unwrap();
        let imgs: Vec<ProjPoint> = base.iter().map(|p| g.apply_point(p).unwrap()).collect();
        let cr2 = cross_ratio(&imgs[0], &imgs[1], &imgs[2], &imgs[3]).unwrap();
        assert_eq!(cr, cr2);

        let l = join(&base[0], &base[1]).unwrap();
        let gl = g.apply_line(&l).unwrap();
        for p in &imgs {
            assert!(incident(p, &gl));
        }
    }

    #[test]
    fn cross_ratio_convention() {
        // Points with chart parameters 0, inf, 1, lambda on the line z = 0
        // realized as (1 : t : 0) for t = 0, inf -> (0:1:0), 1, lambda.
        let p0 = pt([1, 0, 0]);
        let pinf = pt([0, 1, 0]);
        let p1 = pt([1, 1, 0]);
        let lam = pt([3, 21, 0]); // t = 7
        let cr = cross_ratio(&p0, &pinf, &p1, &lam).unwrap();
        assert_eq!(cr.as_rational().unwrap(), Q::from_integer(BigInt::from(7)));

        // Harmonic quadruple (0, inf; 1, -1).
        let pm1 = pt([1, -1, 0]);
        let h = cross_ratio(&p0, &pinf, &p1, &pm1).unwrap();
        assert_eq!(h.as_rational().unwrap(), Q::from_integer(BigInt::from(-1)));

        assert!(cross_ratio(&p0, &pinf, &p1, &pt([0, 0, 1])).is_err());
        assert!(cross_ratio(&p0, &p0, &p1, &pm1).is_err());
    }

    #[test]
    fn conic_recovery_and_membership() {
        // Five points on xy = z^2, parametrized (s^2 : 1 : s).
        let field = fq();
        let on_conic = |s: i64| pt([s * s, 1, s]);
        let five = [
            on_conic(1),
            on_conic(2),
            on_conic(3),
            on_conic(-1),
            on_conic(-2),
        ];
        let conic = conic_through(&five).unwrap();
        // Coefficients proportional to xy - z^2: canonical form has z^2
        // leading... first nonzero among (x2, y2, z2, xy, xz, yz) is z2 = -1,
        // scaled to 1 gives xy = -1.
        let expect: Vec<FieldElement> = [0i64, 0, 1, -1, 0, 0]
            .iter()
            .map(|&c| field.from_int(c))
            .collect();
        assert_eq!(conic.coefficients(), &expect[..]);
        let sixth = on_conic(5);
        assert!(conic.contains(&sixth));
        let pts6 = [
            five[0].clone(),
            five[1].clone(),
            five[2].clone(),
            five[3].clone(),
            five[4].clone(),
            sixth,
        ];
        assert!(on_common_conic(&pts6));
        let off = pt([1, 1, 0]); // xy = 1 but z^2 = 0
        let pts6b = [
            five[0].clone(),
            five[1].clone(),
            five[2].clone(),
            five[3].clone(),
            five[4].clone(),
            off,
        ];
        assert!(!on_common_conic(&pts6b));

        // Rank-deficient: four collinear points leave a pencil of conics.
        let bad = [
            pt([0, 1, 0]),
            pt([0, 1, 1]),
            pt([0, 1, 2]),
            pt([0, 1, 3]),
            pt([1, 1, 1]),
        ];
        assert!(conic_through(&bad).is_err());
    }
}
