//! Deduplicated graph families with provenance, and their on-disk store.

mod store;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::embed::{canonical_key, IsoGroup, MarkedPlaneGraph};

pub use store::{dot_record, export, export_to_file, hex, CatalogStore, ExportFormat, StoreError, MANIFEST};

/// The operation that produced a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OpKind {
    Base,
    U,
    S,
    J,
    X,
    Paste,
    Identify,
    Glue,
    ClassC,
    Loaded,
}

impl OpKind {
    pub fn as_str(self) -> &'static str {
        match self {
            OpKind::Base => "base",
            OpKind::U => "U",
            OpKind::S => "S",
            OpKind::J => "J",
            OpKind::X => "X",
            OpKind::Paste => "paste",
            OpKind::Identify => "identify",
            OpKind::Glue => "glue",
            OpKind::ClassC => "classc",
            OpKind::Loaded => "loaded",
        }
    }
}

/// One derivation of a graph: the operation and its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerationRecord {
    pub op: OpKind,
    pub detail: String,
}

impl GenerationRecord {
    pub fn new(op: OpKind, detail: impl Into<String>) -> Self {
        GenerationRecord { op, detail: detail.into() }
    }
}

impl fmt::Display for GenerationRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.detail.is_empty() {
            write!(f, "{}", self.op.as_str())
        } else {
            write!(f, "{} {}", self.op.as_str(), self.detail)
        }
    }
}

/// A member of a family: the graph, its canonical key, the first
/// derivation found and how many derivations reached it.
#[derive(Debug, Clone)]
pub struct Entry {
    pub graph: MarkedPlaneGraph,
    pub key: Vec<u8>,
    pub provenance: GenerationRecord,
    pub derivations: u64,
}

/// An in-memory family keyed by canonical key.
#[derive(Debug, Clone)]
pub struct Family {
    pub name: String,
    pub group: IsoGroup,
    entries: Vec<Entry>,
    index: HashMap<Vec<u8>, usize>,
}

impl Family {
    pub fn new(name: impl Into<String>, group: IsoGroup) -> Self {
        Family { name: name.into(), group, entries: Vec::new(), index: HashMap::new() }
    }

    /// Inserts `mg` unless an isomorphic graph is present; the derivation
    /// is counted either way.
    pub fn put(&mut self, mg: MarkedPlaneGraph, provenance: GenerationRecord) -> bool {
        let key = canonical_key(&mg, self.group);
        self.put_keyed(mg, key, provenance)
    }

    pub fn put_keyed(&mut self, mg: MarkedPlaneGraph, key: Vec<u8>, provenance: GenerationRecord) -> bool {
        if let Some(&i) = self.index.get(&key) {
            self.entries[i].derivations += 1;
            return false;
        }
        self.index.insert(key.clone(), self.entries.len());
        self.entries.push(Entry { graph: mg, key, provenance, derivations: 1 });
        true
    }

    pub fn contains_key(&self, key: &[u8]) -> bool {
        self.index.contains_key(key)
    }

    pub fn get(&self, key: &[u8]) -> Option<&Entry> {
        self.index.get(key).map(|&i| &self.entries[i])
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    /// Orders members by canonical key.
    pub fn sort(&mut self) {
        self.entries.sort_by(|a, b| a.key.cmp(&b.key));
        self.index = self.entries.iter().enumerate().map(|(i, e)| (e.key.clone(), i)).collect();
    }

    pub fn into_entries(self) -> Vec<Entry> {
        self.entries
    }

    pub fn from_entries(name: impl Into<String>, group: IsoGroup, entries: Vec<Entry>) -> Self {
        let mut f = Family::new(name, group);
        for e in entries {
            if let Some(&i) = f.index.get(&e.key) {
                f.entries[i].derivations += e.derivations;
            } else {
                f.index.insert(e.key.clone(), f.entries.len());
                f.entries.push(e);
            }
        }
        f
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn put_twice_and_mirror() {
        let mut f = Family::new("t", IsoGroup::Reflect);
        let c = MarkedPlaneGraph::bare_cycle(6);
        assert!(f.put(c.clone(), GenerationRecord::new(OpKind::Base, "")));
        assert!(!f.put(c.clone(), GenerationRecord::new(OpKind::Base, "")));
        assert!(!f.put(c.mirror(), GenerationRecord::new(OpKind::Base, "")));
        assert_eq!(f.len(), 1);
        assert_eq!(f.entries()[0].derivations, 3);
    }
}
