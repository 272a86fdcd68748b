//! Plumbing behind the command-line front-end: object parsing, operation
//! dispatch and deterministic JSON/CSV rendering.

use serde_json::{json, Value};

use crate::coeff::QParam;
use crate::dual::{pairing, star};
use crate::enumerate::{feynman_graphs, posets, quasi_posets, simple_digraphs, Bounds};
use crate::error::{Error, Result};
use crate::fg::{fg_algebra, FgAlgebra};
use crate::graph::{FeynmanGraph, SimpleDigraph};
use crate::hopf::{Family, Hopf, Tensor2};
use crate::lincomb::LinComb;
use crate::qp::{poset_algebra, qp_algebra, QuasiPoset};
use crate::realization::{realize, realize_quasi_poset, realize_simple, AlgElement, Alphabet};
use crate::sg::sg_algebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyName {
    Fg,
    Sg,
    Qp,
    Poset,
}

impl FamilyName {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "fg" => Ok(FamilyName::Fg),
            "sg" => Ok(FamilyName::Sg),
            "qp" => Ok(FamilyName::Qp),
            "poset" | "posets" => Ok(FamilyName::Poset),
            _ => Err(Error::Parse(format!("unknown family {s:?} (fg, sg, qp, poset)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

/// Objects the front-end can read and print.
pub trait CliObject: Clone + Ord {
    fn parse(v: &Value, ordered: bool) -> Result<Self>;
    fn json(&self) -> Value;
    fn key(&self) -> String;
}

impl CliObject for FeynmanGraph {
    fn parse(v: &Value, ordered: bool) -> Result<Self> {
        Ok(FeynmanGraph::from_json(&with_mode(v, ordered))?)
    }
    fn json(&self) -> Value {
        self.to_json()
    }
    fn key(&self) -> String {
        self.notation()
    }
}

impl CliObject for SimpleDigraph {
    fn parse(v: &Value, ordered: bool) -> Result<Self> {
        SimpleDigraph::from_json(&with_mode(v, ordered))
    }
    fn json(&self) -> Value {
        self.to_json()
    }
    fn key(&self) -> String {
        self.notation()
    }
}

impl CliObject for QuasiPoset {
    fn parse(v: &Value, ordered: bool) -> Result<Self> {
        QuasiPoset::from_json(&with_mode(v, ordered))
    }
    fn json(&self) -> Value {
        self.to_json()
    }
    fn key(&self) -> String {
        self.notation()
    }
}

fn with_mode(v: &Value, ordered: bool) -> Value {
    let mut v = v.clone();
    if let Value::Object(m) = &mut v {
        m.insert("ordered".into(), json!(ordered));
    }
    v
}

/// Reads inline JSON, or a file when the argument starts with `@`.
pub fn read_json(arg: &str) -> Result<Value> {
    let text = match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?,
        None => arg.to_string(),
    };
    Ok(serde_json::from_str(&text)?)
}

/// `equivalent:N`, `ordered:N` or a comma-separated rank list such as `0,0,1`.
pub fn parse_alphabet(s: &str) -> Result<Alphabet> {
    let bad = || Error::Parse(format!("bad alphabet {s:?}"));
    if let Some(n) = s.strip_prefix("equivalent:") {
        return Ok(Alphabet::equivalent(n.parse().map_err(|_| bad())?));
    }
    if let Some(n) = s.strip_prefix("ordered:") {
        return Ok(Alphabet::ordered(n.parse().map_err(|_| bad())?));
    }
    let ranks: std::result::Result<Vec<u32>, _> = s.split(',').map(|t| t.trim().parse()).collect();
    Ok(Alphabet::new(&ranks.map_err(|_| bad())?))
}

/// Linear combination as `{"terms": [{coeff, key, object}...], "text": "..."}`;
/// coefficients are exact `[exponent, "num/den"]` arrays.
pub fn lincomb_json<K: CliObject>(a: &LinComb<K>) -> Value {
    let terms: Vec<Value> = a
        .iter()
        .map(|(k, c)| json!({"coeff": c.to_json(), "key": k.key(), "object": k.json()}))
        .collect();
    json!({"terms": terms, "text": text_of(a.iter().map(|(k, c)| (k.key(), c.to_string())))})
}

pub fn tensor_json<K: CliObject>(t: &Tensor2<K>) -> Value {
    let terms: Vec<Value> = t
        .iter()
        .map(|((l, r), c)| {
            json!({"coeff": c.to_json(), "left": l.key(), "left_object": l.json(),
                   "right": r.key(), "right_object": r.json()})
        })
        .collect();
    let text = text_of(t.iter().map(|((l, r), c)| (format!("{} ⊗ {}", l.key(), r.key()), c.to_string())));
    json!({"terms": terms, "text": text})
}

pub fn realization_json(a: &AlgElement) -> Value {
    let terms: Vec<Value> = a
        .iter()
        .map(|(m, c)| json!({"coeff": c.to_json(), "monomial": m.text()}))
        .collect();
    json!({"terms": terms, "text": text_of(a.iter().map(|(m, c)| (m.text(), c.to_string())))})
}

fn text_of(terms: impl Iterator<Item = (String, String)>) -> String {
    let parts: Vec<String> = terms
        .map(|(k, c)| if c == "1" { k } else { format!("({c})·{k}") })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_row(fields: &[String]) -> String {
    fields.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(",")
}

/// One canonical object per line, JSON or CSV (`key,json`).
pub fn enumerate_lines(family: FamilyName, n: usize, bounds: Bounds, ordered: bool, format: Format) -> Result<Vec<String>> {
    if n > 9 {
        return Err(Error::VertexBudgetExceeded { n, max: 9 });
    }
    fn lines<K: CliObject>(objs: Vec<K>, format: Format) -> Vec<String> {
        let mut out = Vec::new();
        if format == Format::Csv {
            out.push("key,object".to_string());
        }
        for o in objs {
            out.push(match format {
                Format::Json => json!({"key": o.key(), "object": o.json()}).to_string(),
                Format::Csv => csv_row(&[o.key(), o.json().to_string()]),
            });
        }
        out
    }
    Ok(match family {
        FamilyName::Fg => lines(feynman_graphs(n, bounds, ordered), format),
        FamilyName::Sg => lines(simple_digraphs(n, bounds.max_edges, ordered), format),
        FamilyName::Qp => lines(quasi_posets(n, ordered), format),
        FamilyName::Poset => lines(posets(n, ordered), format),
    })
}

#[derive(Clone, Debug)]
pub struct OpArgs {
    pub op: String,
    pub family: FamilyName,
    pub left: Value,
    pub right: Option<Value>,
    pub q: QParam,
    pub q1: QParam,
    pub q2: QParam,
    pub ordered: bool,
    pub alphabet: Option<Alphabet>,
}

fn right<K: CliObject>(args: &OpArgs) -> Result<K> {
    let v = args.right.as_ref().ok_or_else(|| Error::Parse(format!("{} needs a right operand", args.op)))?;
    K::parse(v, args.ordered)
}

fn hopf_op<F: Family>(alg: &Hopf<F>, args: &OpArgs) -> Result<Value>
where
    F::Obj: CliObject,
{
    let a = alg.basis(&F::Obj::parse(&args.left, args.ordered)?);
    match args.op.as_str() {
        "product" => Ok(lincomb_json(&alg.product(&a, &alg.basis(&right::<F::Obj>(args)?)))),
        "Delta" => Ok(tensor_json(&alg.coproduct(&a))),
        "antipode" => Ok(lincomb_json(&alg.antipode(&a))),
        "counit" => Ok(json!({"coeff": alg.counit(&a).to_json()})),
        other => Err(Error::Unsupported(format!("operation {other:?} on this family"))),
    }
}

fn fg_delta(alg: &FgAlgebra, args: &OpArgs) -> Result<Value> {
    let a = alg.basis(&FeynmanGraph::parse(&args.left, args.ordered)?);
    Ok(tensor_json(&alg.coaction(&a, &args.q1, &args.q2)?))
}

fn need_alphabet(args: &OpArgs) -> Result<&Alphabet> {
    args.alphabet.as_ref().ok_or_else(|| Error::Parse("realize needs --alphabet".into()))
}

/// Dispatches one operation and returns its canonical JSON result.
pub fn run_op(args: &OpArgs) -> Result<Value> {
    use FamilyName::*;
    let ordered = args.ordered;
    match (args.op.as_str(), args.family) {
        ("delta", Fg) => fg_delta(&fg_algebra(ordered, args.q.clone()), args),
        ("delta", Sg) => {
            let alg = sg_algebra(ordered, args.q.clone());
            let a = alg.basis(&SimpleDigraph::parse(&args.left, ordered)?);
            Ok(tensor_json(&alg.internal_coproduct(&a)?))
        }
        ("delta", Qp | Poset) => Err(Error::Unsupported("no squaring coproduct on quasi-posets".into())),
        ("star", Poset | Qp) => {
            let alg = poset_algebra(ordered, QParam::zero());
            let p = alg.basis(&QuasiPoset::parse(&args.left, ordered)?);
            let q = alg.basis(&right::<QuasiPoset>(args)?);
            Ok(lincomb_json(&star(&p, &q)?))
        }
        ("pair", Poset | Qp) => {
            let alg = poset_algebra(ordered, QParam::zero());
            let p = alg.basis(&QuasiPoset::parse(&args.left, ordered)?);
            let q = alg.basis(&right::<QuasiPoset>(args)?);
            Ok(json!({"coeff": pairing(&p, &q)?.to_json()}))
        }
        ("star" | "pair", _) => Err(Error::Unsupported(format!("{} is defined on posets only", args.op))),
        ("realize", Fg) => Ok(realization_json(&realize(&FeynmanGraph::parse(&args.left, ordered)?, need_alphabet(args)?))),
        ("realize", Sg) => Ok(realization_json(&realize_simple(&SimpleDigraph::parse(&args.left, ordered)?, need_alphabet(args)?))),
        ("realize", Qp | Poset) => {
            Ok(realization_json(&realize_quasi_poset(&QuasiPoset::parse(&args.left, ordered)?, need_alphabet(args)?)))
        }
        (_, Fg) => hopf_op(&fg_algebra(ordered, args.q.clone()), args),
        (_, Sg) => hopf_op(&sg_algebra(ordered, args.q.clone()), args),
        (_, Qp) => hopf_op(&qp_algebra(ordered, args.q.clone()), args),
        (_, Poset) => hopf_op(&poset_algebra(ordered, args.q.clone()), args),
    }
}

/// Structure constants as CSV. `product` rows are `left,right,result,coefficient`
/// over pairs whose vertex counts add up to at most `max_vertices`; `Delta`
/// rows are `source,left,right,coefficient`.
pub fn export_constants(family: FamilyName, op: &str, max_vertices: usize, bounds: Bounds, ordered: bool, q: QParam) -> Result<String> {
    fn table<F: Family>(alg: &Hopf<F>, basis: Vec<F::Obj>, op: &str, max_vertices: usize) -> Result<Vec<String>>
    where
        F::Obj: CliObject,
    {
        let fam = &alg.family;
        let mut rows = Vec::new();
        match op {
            "product" => {
                rows.push("left,right,result,coefficient".to_string());
                for a in &basis {
                    for b in &basis {
                        if fam.size(a) + fam.size(b) > max_vertices {
                            continue;
                        }
                        for (r, c) in &alg.product_basis(a, b) {
                            rows.push(csv_row(&[a.key(), b.key(), r.key(), c.to_string()]));
                        }
                    }
                }
            }
            "Delta" => {
                rows.push("source,left,right,coefficient".to_string());
                for a in &basis {
                    for ((l, r), c) in &alg.coproduct_basis(a) {
                        rows.push(csv_row(&[a.key(), l.key(), r.key(), c.to_string()]));
                    }
                }
            }
            other => return Err(Error::Unsupported(format!("export of {other:?} (product, Delta)"))),
        }
        Ok(rows)
    }
    use crate::enumerate::*;
    let rows = match family {
        FamilyName::Fg => table(&fg_algebra(ordered, q), feynman_graphs_up_to(max_vertices, bounds, ordered), op, max_vertices)?,
        FamilyName::Sg => {
            table(&sg_algebra(ordered, q), simple_digraphs_up_to(max_vertices, bounds.max_edges, ordered), op, max_vertices)?
        }
        FamilyName::Qp => table(&qp_algebra(ordered, q), quasi_posets_up_to(max_vertices, ordered), op, max_vertices)?,
        FamilyName::Poset => table(&poset_algebra(ordered, q), posets_up_to(max_vertices, ordered), op, max_vertices)?,
    };
    Ok(rows.join("\n") + "\n")
}
