//! JSON interchange documents.
//!
//! Scalars are strings (`"3/2"`, `"-1"`, residues as plain integers) and the
//! field is declared once at the top. `mult[i][j]` and `action[i][a]` are
//! coefficient arrays, `comult[i]` is a flat array of `dim²` coefficients
//! with `e_j ⊗ e_k` at `j · dim + k`, and `antipode[i]` holds `S(e_i)`.

use serde_json::{json, Map, Value};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::hopf::HopfAlgebra;
use crate::linalg::{Matrix, Tensor3, Vector};
use crate::paction::PartialAction;
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    /// Invariant factors of a finite abelian group.
    Abelian(Vec<usize>),
    /// Explicit multiplication table over `0..n`.
    Table(Vec<Vec<usize>>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    GroupAlgebra,
    DualGroupAlgebra,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupBlock {
    pub spec: GroupSpec,
    pub construction: Construction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub name: Option<String>,
    pub field: Field,
    pub group: Option<GroupBlock>,
    pub hopf: Option<HopfAlgebra>,
    pub algebra: Option<Algebra>,
    /// `action[i][a] = h_i · a_a`.
    pub action: Option<Tensor3>,
}

impl GroupBlock {
    pub fn group(&self) -> Result<Group> {
        match &self.spec {
            GroupSpec::Abelian(f) if f.len() == 1 => Group::cyclic(f[0]),
            GroupSpec::Abelian(f) => Group::abelian(f),
            GroupSpec::Table(t) => Group::from_table(t.clone()),
        }
    }

    pub fn hopf(&self, field: Field) -> Result<HopfAlgebra> {
        let g = self.group()?;
        Ok(match self.construction {
            Construction::GroupAlgebra => HopfAlgebra::group_algebra(field, &g),
            Construction::DualGroupAlgebra => HopfAlgebra::dual_group_algebra(field, &g),
        })
    }
}

impl Document {
    pub fn new(field: Field) -> Document {
        Document { name: None, field, group: None, hopf: None, algebra: None, action: None }
    }

    pub fn from_action(name: &str, p: &PartialAction) -> Document {
        Document {
            name: Some(name.into()),
            field: p.algebra().field(),
            group: None,
            hopf: Some(p.hopf().clone()),
            algebra: Some(p.algebra().clone()),
            action: Some(p.tensor().clone()),
        }
    }

    /// The Hopf algebra, from the explicit block or the group block.
    pub fn resolve_hopf(&self) -> Result<Option<HopfAlgebra>> {
        match (&self.hopf, &self.group) {
            (Some(h), _) => Ok(Some(h.clone())),
            (None, Some(g)) => g.hopf(self.field).map(Some),
            (None, None) => Ok(None),
        }
    }

    /// The partial action described by the document. A missing algebra is
    /// the underlying algebra of `H` when there is no action block, and a
    /// missing action is `h · a = ε(h) a`.
    pub fn partial_action(&self) -> Result<PartialAction> {
        let h = self.resolve_hopf()?.ok_or_else(|| Error::Parse { location: "hopf".into(), message: "a hopf or group block is required".into() })?;
        let alg = match &self.algebra {
            Some(a) => a.clone(),
            None if self.action.is_none() => h.algebra().clone(),
            None => return Err(Error::Parse { location: "algebra".into(), message: "an action block needs an algebra block".into() }),
        };
        match &self.action {
            Some(t) => PartialAction::new(h, alg, t.clone()).map_err(|e| Error::Parse { location: "action".into(), message: e.to_string() }),
            None => Ok(PartialAction::trivial(h, alg)),
        }
    }

    pub fn to_value(&self) -> Value {
        let mut m = Map::new();
        m.insert("field".into(), json!(self.field.name()));
        if let Some(n) = &self.name {
            m.insert("name".into(), json!(n));
        }
        if let Some(g) = &self.group {
            let mut gm = Map::new();
            match &g.spec {
                GroupSpec::Abelian(f) => gm.insert("factors".into(), json!(f)),
                GroupSpec::Table(t) => gm.insert("table".into(), json!(t)),
            };
            let c = match g.construction {
                Construction::GroupAlgebra => "group-algebra",
                Construction::DualGroupAlgebra => "dual-group-algebra",
            };
            gm.insert("construction".into(), json!(c));
            m.insert("group".into(), Value::Object(gm));
        }
        if let Some(h) = &self.hopf {
            let mut hm = algebra_value(h.algebra());
            hm.insert("comult".into(), vectors(h.comult()));
            hm.insert("counit".into(), vector(h.counit()));
            hm.insert("antipode".into(), vectors(&h.antipode().columns()));
            m.insert("hopf".into(), Value::Object(hm));
        }
        if let Some(a) = &self.algebra {
            m.insert("algebra".into(), Value::Object(algebra_value(a)));
        }
        if let Some(t) = &self.action {
            m.insert("action".into(), tensor(t));
        }
        Value::Object(m)
    }

    /// Pretty JSON with sorted keys and canonical scalars.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("value prints");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Document> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
            location: format!("line {} column {}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        Document::from_value(&v)
    }

    pub fn from_value(v: &Value) -> Result<Document> {
        let root = Path::root();
        let obj = root.object(v)?;
        for key in obj.keys() {
            if !["field", "name", "group", "hopf", "algebra", "action"].contains(&key.as_str()) {
                return Err(root.key(key).err("unknown key"));
            }
        }
        let fp = root.key("field");
        let field = Field::from_name(fp.string(obj.get("field").ok_or_else(|| fp.err("missing"))?)?).map_err(|e| fp.err(&e.to_string()))?;
        let name = obj.get("name").map(|n| root.key("name").string(n).map(str::to_string)).transpose()?;
        let group = obj.get("group").map(|g| parse_group(&root.key("group"), g)).transpose()?;
        let hopf = obj.get("hopf").map(|h| parse_hopf(&root.key("hopf"), h, field)).transpose()?;
        if group.is_some() && hopf.is_some() {
            return Err(root.key("group").err("give either a group block or a hopf block, not both"));
        }
        let algebra = obj.get("algebra").map(|a| parse_algebra(&root.key("algebra"), a, field)).transpose()?;
        let doc = Document { name, field, group, hopf, algebra, action: None };
        let action = match obj.get("action") {
            None => None,
            Some(a) => {
                let ap = root.key("action");
                let h = doc.resolve_hopf().map_err(|e| root.key("group").err(&e.to_string()))?.ok_or_else(|| ap.err("needs a hopf or group block"))?;
                let alg = doc.algebra.as_ref().ok_or_else(|| ap.err("needs an algebra block"))?;
                Some(parse_tensor(&ap, a, field, h.dim(), alg.dim(), alg.dim())?)
            }
        };
        if doc.algebra.is_none() || action.is_none() {
            doc.resolve_hopf().map_err(|e| root.key("group").err(&e.to_string()))?;
        }
        Ok(Document { action, ..doc })
    }
}

fn vector(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|c| Value::String(c.to_string())).collect())
}

fn vectors(v: &[Vector]) -> Value {
    Value::Array(v.iter().map(|x| vector(x)).collect())
}

fn tensor(t: &Tensor3) -> Value {
    Value::Array(t.to_nested().iter().map(|row| vectors(row)).collect())
}

fn algebra_value(a: &Algebra) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("names".into(), json!(a.names()));
    m.insert("mult".into(), tensor(a.mult()));
    m.insert("unit".into(), vector(a.unit()));
    m
}

/// JSON path used in diagnostics, e.g. `hopf.mult[1][0][2]`.
#[derive(Clone)]
struct Path(String);

impl Path {
    fn root() -> Path {
        Path(String::new())
    }

    fn key(&self, k: &str) -> Path {
        Path(if self.0.is_empty() { k.to_string() } else { format!("{}.{k}", self.0) })
    }

    fn index(&self, i: usize) -> Path {
        Path(format!("{}[{i}]", self.0))
    }

    fn err(&self, message: &str) -> Error {
        Error::Parse { location: if self.0.is_empty() { "document".into() } else { self.0.clone() }, message: message.into() }
    }

    fn object<'a>(&self, v: &'a Value) -> Result<&'a Map<String, Value>> {
        v.as_object().ok_or_else(|| self.err("expected an object"))
    }

    fn array<'a>(&self, v: &'a Value, len: Option<usize>) -> Result<&'a Vec<Value>> {
        let a = v.as_array().ok_or_else(|| self.err("expected an array"))?;
        match len {
            Some(n) if a.len() != n => Err(self.err(&format!("expected {n} entries, found {}", a.len()))),
            _ => Ok(a),
        }
    }

    fn string<'a>(&self, v: &'a Value) -> Result<&'a str> {
        v.as_str().ok_or_else(|| self.err("expected a string"))
    }

    fn usize(&self, v: &Value) -> Result<usize> {
        v.as_u64().map(|x| x as usize).ok_or_else(|| self.err("expected a non-negative integer"))
    }

    fn field_of<'a>(&self, obj: &'a Map<String, Value>, k: &str) -> Result<(&'a Value, Path)> {
        let p = self.key(k);
        obj.get(k).map(|v| (v, p.clone())).ok_or_else(|| p.err("missing"))
    }
}

fn parse_scalar(p: &Path, v: &Value, field: Field) -> Result<Scalar> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
        _ => return Err(p.err("expected a scalar string")),
    };
    field.parse(&text).map_err(|_| p.err(&format!("invalid scalar {text:?} for field {}", field.name())))
}

fn parse_vector(p: &Path, v: &Value, field: Field, len: usize) -> Result<Vector> {
    p.array(v, Some(len))?.iter().enumerate().map(|(i, x)| parse_scalar(&p.index(i), x, field)).collect()
}

fn parse_vectors(p: &Path, v: &Value, field: Field, count: usize, len: usize) -> Result<Vec<Vector>> {
    p.array(v, Some(count))?.iter().enumerate().map(|(i, x)| parse_vector(&p.index(i), x, field, len)).collect()
}

fn parse_tensor(p: &Path, v: &Value, field: Field, rows: usize, cols: usize, out: usize) -> Result<Tensor3> {
    let nested = p
        .array(v, Some(rows))?
        .iter()
        .enumerate()
        .map(|(i, r)| parse_vectors(&p.index(i), r, field, cols, out))
        .collect::<Result<Vec<_>>>()?;
    Tensor3::from_nested(field, rows, cols, out, nested).map_err(|e| p.err(&e.to_string()))
}

fn parse_names(p: &Path, obj: &Map<String, Value>) -> Result<Vec<String>> {
    let (v, np) = p.field_of(obj, "names")?;
    np.array(v, None)?.iter().enumerate().map(|(i, x)| np.index(i).string(x).map(str::to_string)).collect()
}

fn parse_algebra(p: &Path, v: &Value, field: Field) -> Result<Algebra> {
    let obj = p.object(v)?;
    let names = parse_names(p, obj)?;
    let n = names.len();
    let (m, mp) = p.field_of(obj, "mult")?;
    let mult = parse_tensor(&mp, m, field, n, n, n)?;
    let (u, up) = p.field_of(obj, "unit")?;
    let unit = parse_vector(&up, u, field, n)?;
    Algebra::new(mult, unit, names).map_err(|e| p.err(&e.to_string()))
}

fn parse_hopf(p: &Path, v: &Value, field: Field) -> Result<HopfAlgebra> {
    let alg = parse_algebra(p, v, field)?;
    let obj = p.object(v)?;
    let n = alg.dim();
    let (c, cp) = p.field_of(obj, "comult")?;
    let comult = parse_vectors(&cp, c, field, n, n * n)?;
    let (e, ep) = p.field_of(obj, "counit")?;
    let counit = parse_vector(&ep, e, field, n)?;
    let (s, sp) = p.field_of(obj, "antipode")?;
    let antipode = Matrix::from_columns(field, n, &parse_vectors(&sp, s, field, n, n)?);
    HopfAlgebra::new(alg, comult, counit, antipode).map_err(|e| p.err(&e.to_string()))
}

fn parse_group(p: &Path, v: &Value) -> Result<GroupBlock> {
    let obj = p.object(v)?;
    let spec = match (obj.get("factors"), obj.get("table")) {
        (Some(f), None) => {
            let fp = p.key("factors");
            GroupSpec::Abelian(fp.array(f, None)?.iter().enumerate().map(|(i, x)| fp.index(i).usize(x)).collect::<Result<_>>()?)
        }
        (None, Some(t)) => {
            let tp = p.key("table");
            let rows = tp.array(t, None)?;
            GroupSpec::Table(
                rows.iter()
                    .enumerate()
                    .map(|(i, r)| {
                        let rp = tp.index(i);
                        rp.array(r, Some(rows.len()))?.iter().enumerate().map(|(j, x)| rp.index(j).usize(x)).collect()
                    })
                    .collect::<Result<_>>()?,
            )
        }
        _ => return Err(p.err("expected exactly one of \"factors\" or \"table\"")),
    };
    let construction = match obj.get("construction") {
        None => Construction::GroupAlgebra,
        Some(c) => match p.key("construction").string(c)? {
            "group-algebra" => Construction::GroupAlgebra,
            "dual-group-algebra" => Construction::DualGroupAlgebra,
            other => return Err(p.key("construction").err(&format!("unknown construction {other:?}"))),
        },
    };
    let block = GroupBlock { spec, construction };
    block.group().map_err(|e| p.err(&e.to_string()))?;
    Ok(block)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweedler_round_trip() {
        let mut d = Document::new(Field::Rational);
        d.hopf = Some(HopfAlgebra::sweedler(Field::Rational));
        let text = d.to_json();
        assert_eq!(Document::from_json(&text).unwrap(), d);
        assert!(text.contains("\"antipode\""));
    }

    #[test]
    fn bad_scalar_has_location() {
        let text = r#"{"field":"Q","algebra":{"names":["1"],"mult":[[["x"]]],"unit":["1"]}}"#;
        match Document::from_json(text) {
            Err(Error::Parse { location, .. }) => assert_eq!(location, "algebra.mult[0][0][0]"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn syntax_error_has_line() {
        match Document::from_json("{\n\"field\": }") {
            Err(Error::Parse { location, .. }) => assert!(location.starts_with("line 2")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn group_block_builds_dual() {
        let text = r#"{"field":"GF(5)","group":{"factors":[2],"construction":"dual-group-algebra"}}"#;
        let d = Document::from_json(text).unwrap();
        let h = d.resolve_hopf().unwrap().unwrap();
        assert_eq!(h.names(), ["p_1", "p_g"]);
        assert_eq!(Document::from_json(&d.to_json()).unwrap(), d);
    }
}
