//! JSON and DOT rendering of crystals.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cartan::{DynkinDiagram, Node};
use crate::crystal::Crystal;
use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Version tag carried by every JSON document this crate writes.
pub const SCHEMA_VERSION: u32 = 1;

/// Serialized crystal. Indices refer to positions in `elements`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrystalJson {
    pub schema_version: u32,
    pub diagram: String,
    pub flip_parity: bool,
    pub elements: Vec<Monomial>,
    /// `[source, i, target]` with `target = f_i(source)`.
    pub edges: Vec<(usize, Node, usize)>,
    pub highest: Vec<usize>,
    /// Weight (as text) to element indices.
    pub weights: BTreeMap<String, Vec<usize>>,
}

pub fn to_json(c: &Crystal) -> CrystalJson {
    CrystalJson {
        schema_version: SCHEMA_VERSION,
        diagram: c.diagram().name(),
        flip_parity: c.diagram().is_flipped(),
        elements: c.elements().to_vec(),
        edges: c.edges().iter().map(|e| (e.source, e.node, e.target)).collect(),
        highest: c.highest().to_vec(),
        weights: c
            .weight_index()
            .into_iter()
            .map(|(w, idx)| (w.to_string(), idx))
            .collect(),
    }
}

/// Rebuilds a crystal, checking that the stored graph matches the recomputed one.
pub fn from_json(doc: &CrystalJson) -> Result<Crystal> {
    if doc.schema_version != SCHEMA_VERSION {
        return Err(Error::Invalid(format!(
            "unsupported schema_version {}",
            doc.schema_version
        )));
    }
    let d = DynkinDiagram::from_name(&doc.diagram)?.with_parity_flip(doc.flip_parity);
    let c = Crystal::from_closed_set(&d, doc.elements.iter().cloned())?;
    if c.len() != doc.elements.len() || c.elements() != doc.elements.as_slice() {
        return Err(Error::Invalid("elements are not in canonical order".into()));
    }
    if to_json(&c) != *doc {
        return Err(Error::Invalid("stored edges or weights disagree with the elements".into()));
    }
    Ok(c)
}

pub fn to_json_string(c: &Crystal) -> String {
    serde_json::to_string_pretty(&to_json(c)).expect("crystal serializes")
}

pub fn from_json_str(text: &str) -> Result<Crystal> {
    let doc: CrystalJson =
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("bad crystal JSON: {e}")))?;
    from_json(&doc)
}

/// Graphviz rendering: nodes labeled by monomials, edges labeled `f_i`.
pub fn to_dot(c: &Crystal) -> String {
    let mut out = String::from("digraph crystal {\n");
    for (idx, p) in c.elements().iter().enumerate() {
        let _ = writeln!(out, "  n{idx} [label=\"{p}\"];");
    }
    for e in c.edges() {
        let _ = writeln!(out, "  n{} -> n{} [label=\"f_{}\"];", e.source, e.target, e.node);
    }
    out.push_str("}\n");
    out
}
