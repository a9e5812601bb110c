//! JSON formats for structures and hypergraphs.
//!
//! Structures: `{"domain_size": n, "relations": [{"name": "R", "arity": k,
//! "tuples": [[i, ...], ...]}]}` with an optional `"names"` array labelling
//! the vertices. Hypergraphs: `{"n": n, "r": r, "edges": [[v, ...], ...]}`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::hypergraph::Hypergraph;
use crate::structures::{RelationalStructure, Signature, Symbol};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationJson {
    pub name: String,
    pub arity: usize,
    pub tuples: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureJson {
    pub domain_size: usize,
    pub relations: Vec<RelationJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypergraphJson {
    pub n: usize,
    pub r: usize,
    pub edges: Vec<Vec<usize>>,
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str, origin: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|source| Error::Json {
        path: origin.to_string(),
        source,
    })
}

impl StructureJson {
    pub fn from_structure(s: &RelationalStructure) -> Self {
        StructureJson {
            domain_size: s.domain_size(),
            relations: s
                .signature()
                .symbols()
                .iter()
                .zip(s.relations())
                .map(|(sym, rel)| RelationJson {
                    name: sym.name.clone(),
                    arity: sym.arity,
                    tuples: rel.tuples().to_vec(),
                })
                .collect(),
            names: None,
        }
    }

    pub fn into_structure(self, origin: &str) -> Result<RelationalStructure> {
        if let Some(names) = &self.names {
            if names.len() != self.domain_size {
                return input(format!(
                    "{origin}: names: {} labels for domain size {}",
                    names.len(),
                    self.domain_size
                ));
            }
        }
        for (ri, rel) in self.relations.iter().enumerate() {
            for (ti, t) in rel.tuples.iter().enumerate() {
                if t.len() != rel.arity {
                    return input(format!(
                        "{origin}: relations[{ri}].tuples[{ti}]: length {} but arity is {}",
                        t.len(),
                        rel.arity
                    ));
                }
                if let Some((pos, v)) = t.iter().enumerate().find(|(_, &v)| v >= self.domain_size) {
                    return input(format!(
                        "{origin}: relations[{ri}].tuples[{ti}][{pos}]: {v} out of range for domain size {}",
                        self.domain_size
                    ));
                }
            }
        }
        let symbols = self
            .relations
            .iter()
            .map(|r| Symbol {
                name: r.name.clone(),
                arity: r.arity,
            })
            .collect();
        let sig = Signature::new(symbols).map_err(|e| Error::Input(format!("{origin}: {e}")))?;
        let rels = self.relations.into_iter().map(|r| r.tuples).collect();
        RelationalStructure::new(sig, self.domain_size, rels).map_err(|e| Error::Input(format!("{origin}: {e}")))
    }
}

impl HypergraphJson {
    pub fn from_hypergraph(h: &Hypergraph) -> Self {
        HypergraphJson {
            n: h.n(),
            r: h.r(),
            edges: h.edges().to_vec(),
        }
    }

    pub fn into_hypergraph(self, origin: &str) -> Result<Hypergraph> {
        for (i, e) in self.edges.iter().enumerate() {
            if let Some((pos, v)) = e.iter().enumerate().find(|(_, &v)| v >= self.n) {
                return input(format!("{origin}: edges[{i}][{pos}]: {v} out of range for n = {}", self.n));
            }
        }
        Hypergraph::new(self.n, self.r, self.edges).map_err(|e| Error::Input(format!("{origin}: {e}")))
    }
}

pub fn structure_from_str(text: &str, origin: &str) -> Result<RelationalStructure> {
    parse::<StructureJson>(text, origin)?.into_structure(origin)
}

pub fn hypergraph_from_str(text: &str, origin: &str) -> Result<Hypergraph> {
    parse::<HypergraphJson>(text, origin)?.into_hypergraph(origin)
}

pub fn read_structure(path: &Path) -> Result<RelationalStructure> {
    structure_from_str(&std::fs::read_to_string(path)?, &path.display().to_string())
}

pub fn read_hypergraph(path: &Path) -> Result<Hypergraph> {
    hypergraph_from_str(&std::fs::read_to_string(path)?, &path.display().to_string())
}

pub fn structure_to_string(s: &RelationalStructure) -> String {
    serde_json::to_string_pretty(&StructureJson::from_structure(s)).expect("structures serialise")
}

pub fn hypergraph_to_string(h: &Hypergraph) -> String {
    serde_json::to_string_pretty(&HypergraphJson::from_hypergraph(h)).expect("hypergraphs serialise")
}
