//! JSON readers and writers for every type the CLI exchanges.

use std::fs;
use std::io::Read;
use std::path::Path;

use serde_json::{json, Map, Value};

use ringel_core::count::IsoClassTable;
use ringel_core::hallpoly::{ClassLabel, DiscreteClass, Partition};
use ringel_core::segre::{DecompSymbol, SegreSymbol};
use ringel_core::upoly::parse_rational;
use ringel_core::verify::CheckReport;
use ringel_core::{make_field_with_budget, Budget, DimVec, Fel, Field, FieldCtx, Matrix, Quiver, RatPoly, Rational, Rep};

use crate::CliError;

type Result<T> = std::result::Result<T, CliError>;

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

/// Reads a JSON argument: `-` for stdin, inline JSON, a file path, or else
/// the argument itself as a JSON string (so `kronecker` means `"kronecker"`).
pub fn read_arg(arg: &str) -> Result<Value> {
    let text = if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| bad(format!("reading stdin: {e}")))?;
        s
    } else if arg.trim_start().starts_with(['{', '[', '"']) || arg.trim().parse::<f64>().is_ok() {
        arg.to_string()
    } else if Path::new(arg).is_file() {
        fs::read_to_string(arg).map_err(|e| bad(format!("reading {arg}: {e}")))?
    } else {
        return Ok(Value::String(arg.to_string()));
    };
    serde_json::from_str(&text).map_err(|e| bad(format!("invalid JSON in {arg:?}: {e}")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64().map(|n| n as usize).ok_or_else(|| bad(format!("{what}: expected a nonnegative integer, got {v}")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(format!("{what}: expected an array, got {v}")))
}

fn field_of<'a>(v: &'a Value, key: &str, what: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| bad(format!("{what}: missing {key:?}")))
}

pub fn usize_list(v: &Value, what: &str) -> Result<Vec<usize>> {
    as_array(v, what)?.iter().map(|x| as_usize(x, what)).collect()
}

pub fn dims_from_json(v: &Value) -> Result<DimVec> {
    Ok(DimVec(usize_list(v, "dimension vector")?))
}

pub fn dims_to_json(d: &DimVec) -> Value {
    json!(d.0)
}

pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn field_to_json(f: &FieldCtx) -> Value {
    json!({"p": f.p(), "e": f.e()})
}

pub fn field_from_json(v: &Value, budget: Budget) -> Result<Field> {
    let p = as_usize(field_of(v, "p", "field")?, "field p")? as u32;
    let e = as_usize(field_of(v, "e", "field")?, "field e")? as u32;
    Ok(make_field_with_budget(p, e, budget)?)
}

pub fn quiver_to_json(q: &Quiver) -> Value {
    match q.name() {
        Some(name) => json!({"preset": name}),
        None => json!({
            "vertices": q.n_vertices(),
            "arrows": q.arrows().iter().map(|&(t, h)| json!([t, h])).collect::<Vec<_>>(),
        }),
    }
}

pub fn quiver_from_json(v: &Value) -> Result<Quiver> {
    if let Some(name) = v.as_str() {
        return Ok(Quiver::from_preset(name)?);
    }
    if let Some(name) = v.get("preset") {
        let name = name.as_str().ok_or_else(|| bad("quiver preset must be a string"))?;
        return Ok(Quiver::from_preset(name)?);
    }
    let n = as_usize(field_of(v, "vertices", "quiver")?, "quiver vertices")?;
    let mut arrows = Vec::new();
    for a in as_array(field_of(v, "arrows", "quiver")?, "quiver arrows")? {
        let pair = usize_list(a, "arrow")?;
        if pair.len() != 2 {
            return Err(bad(format!("arrow must be [tail, head], got {a}")));
        }
        arrows.push((pair[0], pair[1]));
    }
    Ok(Quiver::new(n, arrows)?)
}

fn fel_to_json(f: &FieldCtx, a: Fel) -> Value {
    json!(f.coeffs(a))
}

fn fel_from_json(f: &FieldCtx, v: &Value) -> Result<Fel> {
    if let Some(n) = v.as_u64() {
        if f.e() != 1 {
            return Err(bad(format!("entry {n}: over F_{} entries are residue arrays", f.q())));
        }
        return Ok(f.from_coeffs(&[n as u32])?);
    }
    let c: Vec<u32> = usize_list(v, "matrix entry")?.into_iter().map(|x| x as u32).collect();
    Ok(f.from_coeffs(&c)?)
}

pub fn rep_to_json(r: &Rep) -> Value {
    let f = &**r.field();
    let mats: Vec<Value> = r
        .mats()
        .iter()
        .map(|m| {
            (0..m.rows())
                .map(|i| (0..m.cols()).map(|j| fel_to_json(f, m.get(i, j))).collect::<Vec<_>>())
                .collect::<Vec<_>>()
                .into()
        })
        .collect();
    json!({
        "quiver": quiver_to_json(r.quiver()),
        "field": field_to_json(f),
        "dims": dims_to_json(r.dims()),
        "mats": mats,
    })
}

pub fn rep_from_json(v: &Value, budget: Budget) -> Result<Rep> {
    let quiver = quiver_from_json(field_of(v, "quiver", "representation")?)?;
    let field = field_from_json(field_of(v, "field", "representation")?, budget)?;
    let dims = dims_from_json(field_of(v, "dims", "representation")?)?;
    let mut mats = Vec::new();
    for (a, m) in as_array(field_of(v, "mats", "representation")?, "mats")?.iter().enumerate() {
        let &(t, h) = quiver.arrows().get(a).ok_or_else(|| bad(format!("more matrices than arrows ({})", a + 1)))?;
        let (rows, cols) = (dims.get(h), dims.get(t));
        let row_vals = as_array(m, "matrix")?;
        if row_vals.len() != rows {
            return Err(bad(format!("arrow {a}: expected {rows} rows, got {}", row_vals.len())));
        }
        let mut data = Vec::with_capacity(rows * cols);
        for row in row_vals {
            let entries = as_array(row, "matrix row")?;
            if entries.len() != cols {
                return Err(bad(format!("arrow {a}: expected {cols} columns, got {}", entries.len())));
            }
            for x in entries {
                data.push(fel_from_json(&field, x)?);
            }
        }
        mats.push(Matrix::from_vec(rows, cols, data)?);
    }
    Ok(Rep::new(quiver, field, dims, mats)?)
}

pub fn poly_to_json(p: &RatPoly) -> Value {
    json!({"poly": p.to_string(), "coeffs": p.to_fraction_strings()})
}

/// Accepts either the machine array or the object written by [`poly_to_json`].
pub fn poly_from_json(v: &Value) -> Result<RatPoly> {
    let coeffs = v.get("coeffs").unwrap_or(v);
    let items: Vec<String> = as_array(coeffs, "polynomial")?
        .iter()
        .map(|c| match c {
            Value::String(s) => Ok(s.clone()),
            Value::Number(n) => Ok(n.to_string()),
            other => Err(bad(format!("coefficient must be \"a/b\", got {other}"))),
        })
        .collect::<Result<_>>()?;
    Ok(RatPoly::from_fraction_strings(&items)?)
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    let s = v.as_str().ok_or_else(|| bad(format!("expected \"a/b\", got {v}")))?;
    Ok(parse_rational(s)?)
}

pub fn partition_from_json(v: &Value) -> Result<Partition> {
    Ok(Partition::new(usize_list(v, "partition")?)?)
}

pub fn partition_to_json(p: &Partition) -> Value {
    json!(p.parts())
}

pub fn segre_from_json(v: &Value) -> Result<SegreSymbol> {
    let mut entries = Vec::new();
    for e in as_array(v, "Segre symbol")? {
        let pair = as_array(e, "Segre entry")?;
        if pair.len() != 2 {
            return Err(bad(format!("Segre entry must be [partition, degree], got {e}")));
        }
        entries.push((partition_from_json(&pair[0])?, as_usize(&pair[1], "degree")?));
    }
    Ok(SegreSymbol::new(entries)?)
}

pub fn segre_to_json(s: &SegreSymbol) -> Value {
    Value::Array(s.entries().iter().map(|(l, d)| json!([partition_to_json(l), d])).collect())
}

pub fn decomp_from_json(v: &Value) -> Result<DecompSymbol> {
    let list = |key: &str| -> Result<Vec<usize>> {
        match v.get(key) {
            Some(x) => usize_list(x, key),
            None => Ok(Vec::new()),
        }
    };
    let regular = match v.get("regular") {
        Some(r) => segre_from_json(r)?,
        None => SegreSymbol::empty(),
    };
    if !v.is_object() {
        return Err(bad(format!("decomposition symbol must be an object, got {v}")));
    }
    Ok(DecompSymbol::new(list("P")?, list("I")?, regular))
}

pub fn decomp_to_json(d: &DecompSymbol) -> Value {
    json!({"P": d.p, "I": d.i, "regular": segre_to_json(&d.regular)})
}

fn label_from_json(v: &Value) -> Result<ClassLabel> {
    if let Some(r) = v.get("root") {
        return Ok(ClassLabel::Root(dims_from_json(r)?));
    }
    if let (Some(t), Some(l)) = (v.get("top"), v.get("length")) {
        return Ok(ClassLabel::Uniserial { top: as_usize(t, "top")?, length: as_usize(l, "length")? });
    }
    if v.is_array() {
        return Ok(ClassLabel::Root(dims_from_json(v)?));
    }
    Err(bad(format!("class label must be {{\"root\": [...]}} or {{\"top\": t, \"length\": l}}, got {v}")))
}

fn label_to_json(l: &ClassLabel) -> Value {
    match l {
        ClassLabel::Root(d) => json!({"root": dims_to_json(d)}),
        ClassLabel::Uniserial { top, length } => json!({"top": top, "length": length}),
    }
}

pub fn discrete_from_json(v: &Value) -> Result<DiscreteClass> {
    let quiver = quiver_from_json(field_of(v, "quiver", "discrete class")?)?;
    let labels = as_array(field_of(v, "labels", "discrete class")?, "labels")?
        .iter()
        .map(label_from_json)
        .collect::<Result<_>>()?;
    Ok(DiscreteClass::new(quiver, labels))
}

pub fn discrete_to_json(c: &DiscreteClass) -> Value {
    json!({"quiver": quiver_to_json(&c.quiver), "labels": c.labels.iter().map(label_to_json).collect::<Vec<_>>()})
}

pub fn report_to_json(r: &CheckReport) -> Value {
    json!({
        "identity": r.identity,
        "instance": r.instance,
        "lhs": rational_to_string(&r.lhs),
        "rhs": rational_to_string(&r.rhs),
        "pass": r.pass,
    })
}

pub fn report_from_json(v: &Value) -> Result<CheckReport> {
    let s = |k: &str| -> Result<String> {
        field_of(v, k, "report")?.as_str().map(str::to_string).ok_or_else(|| bad(format!("report {k} must be a string")))
    };
    let r = CheckReport::new(
        s("identity")?,
        s("instance")?,
        rational_from_json(field_of(v, "lhs", "report")?)?,
        rational_from_json(field_of(v, "rhs", "report")?)?,
    );
    if field_of(v, "pass", "report")?.as_bool() != Some(r.pass) {
        return Err(bad("report pass flag disagrees with its values"));
    }
    Ok(r)
}

pub fn table_to_json(t: &IsoClassTable) -> Value {
    let classes: Vec<Value> = t
        .entries()
        .iter()
        .map(|e| json!({"rep": rep_to_json(&e.rep), "aut": e.aut.to_string(), "orbit": e.orbit.to_string()}))
        .collect();
    let mut m = Map::new();
    m.insert("quiver".into(), quiver_to_json(t.quiver()));
    m.insert("field".into(), field_to_json(t.field()));
    m.insert("dims".into(), dims_to_json(t.dims()));
    m.insert("classes".into(), Value::Array(classes));
    m.insert("orbit_total".into(), json!(t.orbit_total().to_string()));
    Value::Object(m)
}
