//! JSON persistence and the text addressing of fields, elements, and
//! arrangements.
//!
//! Field elements serialize with exact rationals as decimal-free "p/q"
//! strings. A square-root tower element nests its base-field coefficient
//! vectors, so the encoding is fully recursive:
//!
//! ```json
//! {"field": {"kind": "cyclotomic", "n": 7}, "coeffs": ["1/2", "0", "-3", "0", "0", "0"]}
//! ```
//!
//! Arrangements hoist the field to the top level and serialize each line as
//! its three coefficient vectors.

use crate::arrangement::{Arrangement, SingularityProfile};
use crate::dynamics::OrbitReport;
use crate::error::{Error, Result};
use crate::field::{parse_rational, Field, FieldElement, FieldKind};
use crate::geom::ProjLine;
use crate::unassuming::{ModuliClass, ModuliPoint};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// JSON form of a field descriptor.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldDescJson {
    Rational,
    Quadratic {
        d: i64,
    },
    Cyclotomic {
        n: u32,
    },
    SqrtExtension {
        base: Box<FieldDescJson>,
        delta: Vec<CoeffJson>,
    },
}

/// JSON form of one coefficient: a rational string, or a nested coefficient
/// vector for tower elements.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffJson {
    Rational(String),
    Nested(Vec<CoeffJson>),
}

pub fn field_to_json(field: &Field) -> Result<FieldDescJson> {
    Ok(match field.kind() {
        FieldKind::Rational => FieldDescJson::Rational,
        FieldKind::Quadratic(d) => FieldDescJson::Quadratic {
            d: d.to_i64()
                .ok_or_else(|| Error::Unsupported("quadratic discriminant exceeds i64".into()))?,
        },
        FieldKind::Cyclotomic(n) => FieldDescJson::Cyclotomic { n: *n },
        FieldKind::SqrtExt { base, delta } => FieldDescJson::SqrtExtension {
            base: Box::new(field_to_json(base)?),
            delta: element_coeffs_to_json(delta),
        },
    })
}

pub fn field_from_json(desc: &FieldDescJson) -> Result<Field> {
    match desc {
        FieldDescJson::Rational => Ok(Field::rational()),
        FieldDescJson::Quadratic { d } => Field::quadratic(*d),
        FieldDescJson::Cyclotomic { n } => Field::cyclotomic(*n),
        FieldDescJson::SqrtExtension { base, delta } => {
            let base_field = field_from_json(base)?;
            let delta_el = element_from_json_coeffs(&base_field, delta)?;
            let adj = crate::field::adjoin_sqrt(&delta_el)?;
            if !adj.extended {
                return Err(Error::InvalidArgument(
                    "declared extension radicand is a square in the base field".into(),
                ));
            }
            Ok(adj.field)
        }
    }
}

pub fn element_coeffs_to_json(e: &FieldElement) -> Vec<CoeffJson> {
    if let Some(coeffs) = e.coeffs() {
        coeffs
            .iter()
            .map(|q| CoeffJson::Rational(q.to_string()))
            .collect()
    } else {
        let (a, b) = e.tower_coeffs().expect("tower element");
        vec![
            CoeffJson::Nested(element_coeffs_to_json(a)),
            CoeffJson::Nested(element_coeffs_to_json(b)),
        ]
    }
}

pub fn element_from_json_coeffs(field: &Field, coeffs: &[CoeffJson]) -> Result<FieldElement> {
    match field.kind() {
        FieldKind::SqrtExt { base, .. } => {
            if coeffs.len() != 2 {
                return Err(Error::Parse(
                    "tower element needs exactly two nested coefficient vectors".into(),
                ));
            }
            let unwrap = |c: &CoeffJson| -> Result<Vec<CoeffJson>> {
                match c {
                    CoeffJson::Nested(v) => Ok(v.clone()),
                    CoeffJson::Rational(s) => Ok(vec![CoeffJson::Rational(s.clone())]),
                }
            };
            let a = element_from_json_coeffs(base, &unwrap(&coeffs[0])?)?;
            let b = element_from_json_coeffs(base, &unwrap(&coeffs[1])?)?;
            field.from_base_pair(a, b)
        }
        _ => {
            let mut qs = Vec::with_capacity(coeffs.len());
            for c in coeffs {
                match c {
                    CoeffJson::Rational(s) => qs.push(parse_rational(s)?),
                    CoeffJson::Nested(_) => {
                        return Err(Error::Parse(
                            "nested coefficients only occur in tower elements".into(),
                        ))
                    }
                }
            }
            field.from_coeffs(qs)
        }
    }
}

/// Standalone element JSON: field descriptor plus coefficient vector.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ElementJson {
    pub field: FieldDescJson,
    pub coeffs: Vec<CoeffJson>,
}

pub fn element_to_json(e: &FieldElement) -> Result<ElementJson> {
    Ok(ElementJson {
        field: field_to_json(e.field())?,
        coeffs: element_coeffs_to_json(e),
    })
}

pub fn element_from_json(j: &ElementJson) -> Result<FieldElement> {
    let field = field_from_json(&j.field)?;
    element_from_json_coeffs(&field, &j.coeffs)
}

/// Arrangement JSON: the field and one coefficient triple per line.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArrangementJson {
    pub field: FieldDescJson,
    pub lines: Vec<[Vec<CoeffJson>; 3]>,
}

pub fn arrangement_to_json(a: &Arrangement) -> Result<ArrangementJson> {
    let lines = a
        .lines()
        .iter()
        .map(|l| {
            let c = l.coords();
            [
                element_coeffs_to_json(&c[0]),
                element_coeffs_to_json(&c[1]),
                element_coeffs_to_json(&c[2]),
            ]
        })
        .collect();
    Ok(ArrangementJson {
        field: field_to_json(a.field())?,
        lines,
    })
}

pub fn arrangement_from_json(j: &ArrangementJson) -> Result<Arrangement> {
    let field = field_from_json(&j.field)?;
    let mut lines = Vec::with_capacity(j.lines.len());
    for triple in &j.lines {
        let coords = [
            element_from_json_coeffs(&field, &triple[0])?,
            element_from_json_coeffs(&field, &triple[1])?,
            element_from_json_coeffs(&field, &triple[2])?,
        ];
        lines.push(ProjLine::new(coords)?);
    }
    Arrangement::new(field, lines)
}

pub fn profile_to_json(p: &SingularityProfile) -> BTreeMap<String, usize> {
    p.counts()
        .iter()
        .map(|(&k, &v)| (k.to_string(), v))
        .collect()
}

/// Orbit report JSON with per-term arrangement payloads.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrbitReportJson {
    pub seed: ArrangementJson,
    pub terms: Vec<ArrangementJson>,
    pub period: Option<usize>,
    pub preperiod: Option<usize>,
    pub terminated: bool,
    pub union_profile: BTreeMap<String, usize>,
}

pub fn orbit_report_to_json(r: &OrbitReport) -> Result<OrbitReportJson> {
    Ok(OrbitReportJson {
        seed: arrangement_to_json(&r.seed)?,
        terms: r
            .terms
            .iter()
            .map(arrangement_to_json)
            .collect::<Result<Vec<_>>>()?,
        period: r.period,
        preperiod: r.preperiod,
        terminated: r.terminated,
        union_profile: profile_to_json(&r.union_profile),
    })
}

/// Moduli report JSON.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuliJson {
    pub class: String,
    pub value: Option<ElementJson>,
}

pub fn moduli_to_json(m: &ModuliPoint) -> Result<ModuliJson> {
    Ok(ModuliJson {
        class: match m.class {
            ModuliClass::Family => "family".into(),
            ModuliClass::Rigid => "rigid".into(),
            ModuliClass::Degenerate => "degenerate".into(),
        },
        value: m.value.as_ref().map(element_to_json).transpose()?,
    })
}

/// Non-basis data JSON: `{"triples": [[1,5,10], ...], "quintuples": [...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NonBasisJson {
    pub triples: Vec<[usize; 3]>,
    pub quintuples: Vec<[usize; 5]>,
}

pub fn nonbasis_from_json(j: &NonBasisJson) -> Result<crate::unassuming::NonBasisSpec> {
    crate::unassuming::NonBasisSpec::new(j.triples.clone(), j.quintuples.clone())
}

/// One manifest per CLI run: what ran, on what, producing which files.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub outputs: Vec<String>,
    pub timings_ms: BTreeMap<String, u128>,
    pub versions: BTreeMap<String, String>,
}

impl RunManifest {
    pub fn new(command: &str) -> Self {
        let mut versions = BTreeMap::new();
        versions.insert("arrangeops".into(), env!("CARGO_PKG_VERSION").into());
        RunManifest {
            command: command.into(),
            inputs: BTreeMap::new(),
            outputs: Vec::new(),
            timings_ms: BTreeMap::new(),
            versions,
        }
    }
}

// ---------------------------------------------------------------------------
// Text parsing: field names, element literals, arrangement addresses.
// ---------------------------------------------------------------------------

/// Parse "rational", "quadratic:5", or "cyclotomic:7".
pub fn parse_field_name(s: &str) -> Result<Field> {
    let s = s.trim();
    if s == "rational" {
        return Ok(Field::rational());
    }
    if let Some(rest) = s.strip_prefix("quadratic:") {
        let d: i64 = rest
            .parse()
            .map_err(|_| Error::Parse(format!("bad quadratic discriminant {rest:?}")))?;
        return Field::quadratic(d);
    }
    if let Some(rest) = s.strip_prefix("cyclotomic:") {
        let n: u32 = rest
            .parse()
            .map_err(|_| Error::Parse(format!("bad cyclotomic index {rest:?}")))?;
        return Field::cyclotomic(n);
    }
    Err(Error::Parse(format!("unknown field {s:?}")))
}

/// Parse an element literal: a rational, "zetaN", "zetaN^k", "sqrtD", "i",
/// scaled terms like "1/2*zeta5^2", and sums/differences such as "2+sqrt5".
/// A field hint (from --field) widens the target field when compatible.
pub fn parse_element_literal(s: &str, hint: Option<&Field>) -> Result<FieldElement> {
    let terms = split_terms(s.trim())?;
    // Determine the base field from the atoms present.
    let mut field = Field::rational();
    for (_, atom) in &terms {
        if let Some(atom) = atom {
            let f = atom.field()?;
            if field == Field::rational() {
                field = f;
            } else if field != f {
                return Err(Error::Parse(format!(
                    "mixed atoms in literal {s:?}; use a single generator"
                )));
            }
        }
    }
    if let Some(h) = hint {
        // Use the hint when it extends the inferred field.
        if *h != field {
            let probe = field.one().embed_into(h);
            match probe {
                Ok(_) => field = h.clone(),
                Err(_) => {
                    return Err(Error::Parse(format!(
                        "literal {s:?} does not embed into the requested field"
                    )))
                }
            }
        }
    }
    let mut acc = field.zero();
    for (coef, atom) in &terms {
        let term = match atom {
            None => field.from_rational(coef.clone()),
            Some(atom) => {
                let base = atom.element()?;
                let emb = base.embed_into(&field)?;
                emb.checked_mul(&field.from_rational(coef.clone()))?
            }
        };
        acc = acc.checked_add(&term)?;
    }
    Ok(acc)
}

#[derive(Debug)]
enum Atom {
    Zeta { n: u32, k: i64 },
    Sqrt { d: i64 },
}

impl Atom {
    fn field(&self) -> Result<Field> {
        match self {
            Atom::Zeta { n, .. } => Field::cyclotomic(*n),
            Atom::Sqrt { d } => Field::quadratic(*d),
        }
    }

    fn element(&self) -> Result<FieldElement> {
        match self {
            Atom::Zeta { n, k } => Field::cyclotomic(*n)?.zeta_pow(*k),
            Atom::Sqrt { d } => Ok(Field::quadratic(*d)?.generator()),
        }
    }
}

type Term = (crate::field::Q, Option<Atom>);

fn split_terms(s: &str) -> Result<Vec<Term>> {
    if s.is_empty() {
        return Err(Error::Parse("empty literal".into()));
    }
    let chars: Vec<char> = s.chars().collect();
    let mut pieces: Vec<(i32, String)> = Vec::new();
    let mut sign = 1;
    let mut cur = String::new();
    let mut idx = 0;
    while idx < chars.len() {
        let ch = chars[idx];
        if (ch == '+' || ch == '-') && idx > 0 && !cur.is_empty() && !cur.ends_with('/') {
            pieces.push((sign, std::mem::take(&mut cur)));
            sign = if ch == '+' { 1 } else { -1 };
        } else if ch == '-' && cur.is_empty() {
            sign = -sign;
        } else if ch == '+' && cur.is_empty() {
            // leading plus, ignore
        } else if !ch.is_whitespace() {
            cur.push(ch);
        }
        idx += 1;
    }
    if cur.is_empty() {
        return Err(Error::Parse(format!("dangling sign in {s:?}")));
    }
    pieces.push((sign, cur));
    pieces
        .into_iter()
        .map(|(sign, body)| parse_term(sign, &body))
        .collect()
}

fn parse_term(sign: i32, body: &str) -> Result<Term> {
    use crate::field::Q;
    use num_bigint::BigInt;
    let signed = |q: Q| if sign < 0 { -q } else { q };
    // coefficient * atom
    if let Some((c, a)) = body.split_once('*') {
        let coef = parse_rational(c)?;
        let atom = parse_atom(a)?
            .ok_or_else(|| Error::Parse(format!("expected generator after * in {body:?}")))?;
        return Ok((signed(coef), Some(atom)));
    }
    if let Some(atom) = parse_atom(body)? {
        return Ok((signed(Q::from_integer(BigInt::from(1))), Some(atom)));
    }
    Ok((signed(parse_rational(body)?), None))
}

fn parse_atom(s: &str) -> Result<Option<Atom>> {
    let s = s.trim();
    if s == "i" {
        return Ok(Some(Atom::Zeta { n: 4, k: 1 }));
    }
    if let Some(rest) = s.strip_prefix("zeta") {
        let (n_str, k) = match rest.split_once('^') {
            Some((n, k)) => (
                n,
                k.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?,
            ),
            None => (rest, 1),
        };
        let n: u32 = n_str
            .parse()
            .map_err(|_| Error::Parse(format!("bad root-of-unity order in {s:?}")))?;
        if n == 0 {
            return Err(Error::Parse("zeta0 is not defined".into()));
        }
        return Ok(Some(Atom::Zeta { n, k }));
    }
    if let Some(rest) = s.strip_prefix("sqrt") {
        let d: i64 = rest
            .parse()
            .map_err(|_| Error::Parse(format!("bad radicand in {s:?}")))?;
        return Ok(Some(Atom::Sqrt { d }));
    }
    Ok(None)
}

/// Parse a catalog address into an arrangement. Supported forms:
/// `c0:t=<lit>`, `cabc:<lit>,<lit>,<lit>`, `ceva:<n>`, `hesse`,
/// `quadrilateral`, `hesse-union`, `g26`, `limit-dual9`, `limit-l2p9`,
/// the composition prefixes `dual15:<spec>` and `lambda:<spec>`, and
/// `@<path>` / `<path>.json` for arrangement files.
pub fn parse_arrangement_spec(spec: &str, hint: Option<&Field>) -> Result<Arrangement> {
    let spec = spec.trim();
    if let Some(path) = spec.strip_prefix('@') {
        return load_arrangement(path);
    }
    if spec.ends_with(".json") && std::path::Path::new(spec).exists() {
        return load_arrangement(spec);
    }
    if let Some(inner) = spec.strip_prefix("dual15:") {
        return crate::unassuming::dual_15(&parse_arrangement_spec(inner, hint)?);
    }
    if let Some(inner) = spec.strip_prefix("lambda:") {
        return parse_arrangement_spec(inner, hint)?.lambda_op(2, 3);
    }
    match spec {
        "hesse" => return crate::unassuming::hesse_seed(),
        "quadrilateral" => return crate::unassuming::c0_of(&Field::rational().one()),
        "hesse-union" => {
            let h = crate::unassuming::hesse_seed()?;
            return h.union(&h.lambda_op(2, 3)?);
        }
        "g26" => return crate::catalog::g26_union(&crate::unassuming::hesse_seed()?),
        "limit-dual9" => return Ok(crate::catalog::limit_objects()?.1),
        "limit-l2p9" => return Ok(crate::catalog::limit_objects()?.2),
        _ => {}
    }
    if let Some(rest) = spec.strip_prefix("ceva:") {
        let n: u32 = rest
            .parse()
            .map_err(|_| Error::Parse(format!("bad Ceva index {rest:?}")))?;
        return crate::catalog::ceva(n);
    }
    if let Some(rest) = spec.strip_prefix("c0:t=") {
        let t = parse_element_literal(rest, hint)?;
        return crate::unassuming::c0_of(&t);
    }
    if let Some(rest) = spec.strip_prefix("cabc:") {
        let parts: Vec<&str> = rest.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::Parse(
                "diagonal family address needs three parameters".into(),
            ));
        }
        let mut elems: Vec<FieldElement> = parts
            .iter()
            .map(|p| parse_element_literal(p, hint))
            .collect::<Result<Vec<_>>>()?;
        // Unify fields: embed the rest into the widest parameter field.
        let widest = elems
            .iter()
            .map(|e| e.field().clone())
            .max_by_key(|f| f.degree())
            .unwrap();
        for e in elems.iter_mut() {
            *e = e.embed_into(&widest)?;
        }
        return crate::unassuming::c_abc(&elems[0], &elems[1], &elems[2]);
    }
    Err(Error::Parse(format!(
        "unknown arrangement address {spec:?}"
    )))
}

pub fn load_arrangement(path: &str) -> Result<Arrangement> {
    let text = std::fs::read_to_string(path)?;
    let json: ArrangementJson = serde_json::from_str(&text)?;
    arrangement_from_json(&json)
}

pub fn save_arrangement(a: &Arrangement, path: &str) -> Result<()> {
    let json = arrangement_to_json(a)?;
    std::fs::write(path, serde_json::to_string_pretty(&json)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::ceva;
    use crate::field::adjoin_sqrt;
    use crate::unassuming::{c0_of, hesse_seed};

    #[test]
    fn element_json_round_trip() {
        let f7 = Field::cyclotomic(7).unwrap();
        let e = f7
            .from_coeffs(vec![
                parse_rational("1/2").unwrap(),
                parse_rational("0").unwrap(),
                parse_rational("-3").unwrap(),
            ])
            .unwrap();
        let j = element_to_json(&e).unwrap();
        let text = serde_json::to_string(&j).unwrap();
        assert!(text.contains("\"cyclotomic\""));
        assert!(text.contains("\"1/2\""));
        let back: ElementJson = serde_json::from_str(&text).unwrap();
        assert_eq!(element_from_json(&back).unwrap(), e);
    }

    #[test]
    fn tower_element_round_trip() {
        let f5 = Field::quadratic(5).unwrap();
        let delta = f5
            .from_coeffs(vec![
                parse_rational("-2").unwrap(),
                parse_rational("-1").unwrap(),
            ])
            .unwrap();
        let ext = adjoin_sqrt(&delta).unwrap();
        let x = ext
            .field
            .from_base_pair(f5.from_int(3), f5.generator())
            .unwrap();
        let j = element_to_json(&x).unwrap();
        let text = serde_json::to_string(&j).unwrap();
        let back: ElementJson = serde_json::from_str(&text).unwrap();
        assert_eq!(element_from_json(&back).unwrap(), x);
    }

    #[test]
    fn arrangement_json_round_trip() {
        for a in [
            c0_of(&Field::rational().from_int(2)).unwrap(),
            hesse_seed().unwrap(),
            ceva(5).unwrap(),
        ] {
            let j = arrangement_to_json(&a).unwrap();
            let text = serde_json::to_string(&j).unwrap();
            let back: ArrangementJson = serde_json::from_str(&text).unwrap();
            let b = arrangement_from_json(&back).unwrap();
            assert!(a.set_equal(&b));
        }
    }

    #[test]
    fn literal_parsing() {
        let two = parse_element_literal("2", None).unwrap();
        assert_eq!(two, Field::rational().from_int(2));

        let half = parse_element_literal("-5/2", None).unwrap();
        assert_eq!(
            half,
            Field::rational().from_rational(parse_rational("-5/2").unwrap())
        );

        let z5 = parse_element_literal("zeta5", None).unwrap();
        assert_eq!(z5, Field::cyclotomic(5).unwrap().generator());

        let z5sq = parse_element_literal("zeta5^2", None).unwrap();
        assert_eq!(z5sq, Field::cyclotomic(5).unwrap().zeta_pow(2).unwrap());

        let i = parse_element_literal("i", None).unwrap();
        assert_eq!(i, Field::cyclotomic(4).unwrap().generator());

        let s = parse_element_literal("2+sqrt5", None).unwrap();
        let f5 = Field::quadratic(5).unwrap();
        let expect = f5
            .from_coeffs(vec![
                parse_rational("2").unwrap(),
                parse_rational("1").unwrap(),
            ])
            .unwrap();
        assert_eq!(s, expect);

        let combo = parse_element_literal("1/2-3*zeta7^2+zeta7", None).unwrap();
        let f7 = Field::cyclotomic(7).unwrap();
        let manual = {
            let a = f7.from_rational(parse_rational("1/2").unwrap());
            let b = f7
                .zeta_pow(2)
                .unwrap()
                .checked_mul(&f7.from_int(-3))
                .unwrap();
            let c = f7.generator();
            a.checked_add(&b).unwrap().checked_add(&c).unwrap()
        };
        assert_eq!(combo, manual);

        // Hint widens a rational literal into a larger field.
        let f7 = Field::cyclotomic(7).unwrap();
        let hinted = parse_element_literal("3", Some(&f7)).unwrap();
        assert_eq!(hinted, f7.from_int(3));

        assert!(parse_element_literal("zeta5+sqrt2", None).is_err());
        assert!(parse_element_literal("1.5", None).is_err());
    }

    #[test]
    fn address_parsing() {
        let a = parse_arrangement_spec("c0:t=2", None).unwrap();
        assert_eq!(a.len(), 6);
        assert!(crate::unassuming::is_unassuming(&a));

        let c = parse_arrangement_spec("ceva:4", None).unwrap();
        assert_eq!(c.len(), 12);

        let z = parse_arrangement_spec("cabc:1,1,zeta5", None).unwrap();
        assert_eq!(z.len(), 6);
        assert_eq!(z.field().degree(), 4);

        let q = parse_arrangement_spec("quadrilateral", None).unwrap();
        assert_eq!(
            q.profile(),
            SingularityProfile::from_pairs([(2, 3), (3, 4)])
        );

        let d = parse_arrangement_spec("dual15:c0:t=2", None).unwrap();
        assert_eq!(d.len(), 15);

        let l = parse_arrangement_spec("lambda:c0:t=2", None).unwrap();
        assert_eq!(l.len(), 6);

        let hu = parse_arrangement_spec("hesse-union", None).unwrap();
        assert_eq!(hu.len(), 12);

        assert!(parse_arrangement_spec("nonsense:abc", None).is_err());
    }

    #[test]
    fn nonbasis_data_loads_from_json() {
        let text = r#"{"triples": [[1,5,10],[2,4,13],[3,9,13],[5,7,8],[6,11,12],[12,14,15]],
                       "quintuples": [[1,2,8,9,12],[1,6,7,13,15],[2,3,5,6,14],
                                      [3,4,7,10,12],[4,5,9,11,15],[8,10,11,13,14]]}"#;
        let json: NonBasisJson = serde_json::from_str(text).unwrap();
        let spec = nonbasis_from_json(&json).unwrap();
        assert_eq!(spec, crate::unassuming::nb1());

        let bad = NonBasisJson {
            triples: vec![[0, 1, 2]],
            quintuples: vec![],
        };
        assert!(nonbasis_from_json(&bad).is_err());
    }

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("arr.json");
        let a = parse_arrangement_spec("c0:t=5/2", None).unwrap();
        save_arrangement(&a, path.to_str().unwrap()).unwrap();
        let loaded = load_arrangement(path.to_str().unwrap()).unwrap();
        assert!(a.set_equal(&loaded));
        // And through the @ addressing.
        let via_at = parse_arrangement_spec(&format!("@{}", path.display()), None).unwrap();
        assert!(a.set_equal(&via_at));
    }
}
