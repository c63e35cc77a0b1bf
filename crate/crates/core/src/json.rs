//! JSON encodings of results. Rationals are strings `"a/b"` (or `"a"`).

use serde_json::{json, Value};

use crate::arakelov::ArakelovElem;
use crate::bottchern::BCForm;
use crate::rat::Rat;
use crate::symfunc::{Partition, SymF};

fn coeff(c: &Rat) -> Value {
    Value::String(c.to_string())
}

fn partition_terms<'a>(terms: impl Iterator<Item = (&'a Partition, &'a Rat)>) -> Value {
    terms.map(|(l, c)| json!({"partition": l.parts(), "coeff": coeff(c)})).collect()
}

/// `{"kind":"bcform","n":..,"r":..,"terms":[{"omega":i,"p":j,"coeff":"a/b"}]}`,
/// terms sorted by `(i, j)`.
pub fn bcform_to_json(form: &BCForm) -> Value {
    let ranks = form.ranks();
    let terms: Value = form.terms().map(|(i, j, c)| json!({"omega": i, "p": j, "coeff": coeff(c)})).collect();
    json!({"kind": "bcform", "n": ranks.n(), "r": ranks.r(), "terms": terms})
}

/// `{"kind":"arakelov","r":..,"s":..,"geom":[..],"arch":[..]}`.
pub fn arakelov_to_json(x: &ArakelovElem) -> Value {
    json!({
        "kind": "arakelov",
        "r": x.r(),
        "s": x.s(),
        "geom": partition_terms(x.geom()),
        "arch": partition_terms(x.arch()),
    })
}

/// `{"kind":"symf","basis":"s","terms":[{"partition":[..],"coeff":".."}]}`.
pub fn symf_to_json(f: &SymF) -> Value {
    json!({"kind": "symf", "basis": f.basis().to_string(), "terms": partition_terms(f.terms())})
}
