//! Directory-backed store: `<family>.rotg` records, `<family>.meta.tsv`
//! sidecars and a `MANIFEST` of sha256 checksums.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

use super::Entry;
use crate::embed::rotg::{parse_records, write_record, RotgError};
use crate::embed::{MarkSite, MarkedPlaneGraph};

pub const MANIFEST: &str = "MANIFEST";
const GENERATOR: &str = concat!("critatlas ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Error)]
pub enum StoreError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: RotgError },
    #[error("unknown family '{0}'")]
    UnknownFamily(String),
    #[error("checksum mismatch for {0}")]
    Checksum(String),
    #[error("malformed manifest line: {0}")]
    Manifest(String),
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> StoreError + '_ {
    move |source| StoreError::Io { path: path.to_path_buf(), source }
}

pub fn hex(bytes: &[u8]) -> String {
    let mut s = String::with_capacity(2 * bytes.len());
    for b in bytes {
        let _ = write!(s, "{b:02x}");
    }
    s
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex(&Sha256::digest(bytes))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Rotg,
    Json,
    Dot,
}

impl std::str::FromStr for ExportFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "rotg" => Ok(ExportFormat::Rotg),
            "json" => Ok(ExportFormat::Json),
            "dot" => Ok(ExportFormat::Dot),
            other => Err(format!("unknown format '{other}'")),
        }
    }
}

impl ExportFormat {
    fn extension(self) -> &'static str {
        match self {
            ExportFormat::Rotg => "rotg",
            ExportFormat::Json => "json",
            ExportFormat::Dot => "dot",
        }
    }
}

/// A catalog directory. Family names are relative paths such as `disk/K13`.
#[derive(Debug, Clone)]
pub struct CatalogStore {
    root: PathBuf,
}

impl CatalogStore {
    pub fn open(root: impl Into<PathBuf>) -> Result<Self, StoreError> {
        let root = root.into();
        fs::create_dir_all(&root).map_err(io_err(&root))?;
        Ok(CatalogStore { root })
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    fn path(&self, family: &str, ext: &str) -> PathBuf {
        self.root.join(format!("{family}.{ext}"))
    }

    pub fn has_family(&self, family: &str) -> bool {
        self.path(family, "rotg").is_file()
    }

    /// Writes the records of `entries` in the given order together with a
    /// meta sidecar (`header` names the columns of `rows`), then refreshes
    /// the manifest.
    pub fn write_family(&self, family: &str, entries: &[Entry], header: &[&str], rows: &[Vec<String>]) -> Result<(), StoreError> {
        assert_eq!(entries.len(), rows.len());
        let rp = self.path(family, "rotg");
        if let Some(dir) = rp.parent() {
            fs::create_dir_all(dir).map_err(io_err(dir))?;
        }
        let mut text = String::new();
        for (i, e) in entries.iter().enumerate() {
            let _ = writeln!(text, "# {} {}", i, e.provenance);
            text.push_str(&write_record(&e.graph));
        }
        fs::write(&rp, text).map_err(io_err(&rp))?;
        let mp = self.path(family, "meta.tsv");
        let mut meta = header.join("\t");
        meta.push('\n');
        for r in rows {
            meta.push_str(&r.join("\t"));
            meta.push('\n');
        }
        fs::write(&mp, meta).map_err(io_err(&mp))?;
        self.refresh_manifest()
    }

    pub fn read_family(&self, family: &str) -> Result<Vec<MarkedPlaneGraph>, StoreError> {
        let p = self.path(family, "rotg");
        if !p.is_file() {
            return Err(StoreError::UnknownFamily(family.to_string()));
        }
        let text = fs::read_to_string(&p).map_err(io_err(&p))?;
        parse_records(&text).map_err(|source| StoreError::Parse { path: p, source })
    }

    /// Meta sidecar rows as column maps.
    pub fn read_meta(&self, family: &str) -> Result<Vec<BTreeMap<String, String>>, StoreError> {
        let p = self.path(family, "meta.tsv");
        if !p.is_file() {
            return Ok(Vec::new());
        }
        let text = fs::read_to_string(&p).map_err(io_err(&p))?;
        let mut lines = text.lines();
        let header: Vec<&str> = lines.next().unwrap_or("").split('\t').collect();
        Ok(lines.map(|l| header.iter().map(|h| h.to_string()).zip(l.split('\t').map(str::to_string)).collect()).collect())
    }

    fn record_files(&self) -> Result<Vec<PathBuf>, StoreError> {
        let mut out = Vec::new();
        let mut stack = vec![self.root.clone()];
        while let Some(dir) = stack.pop() {
            for ent in fs::read_dir(&dir).map_err(io_err(&dir))? {
                let p = ent.map_err(io_err(&dir))?.path();
                if p.is_dir() {
                    stack.push(p);
                } else if p.extension().is_some_and(|e| e == "rotg" || e == "tsv") {
                    out.push(p);
                }
            }
        }
        out.sort();
        Ok(out)
    }

    fn rel(&self, p: &Path) -> String {
        p.strip_prefix(&self.root).unwrap_or(p).to_string_lossy().replace('\\', "/")
    }

    /// Rewrites `MANIFEST`: one `file  sha256  count` line per record or
    /// meta file, where count is the number of records (rows for meta).
    pub fn refresh_manifest(&self) -> Result<(), StoreError> {
        let mut text = format!("# {GENERATOR}\n");
        for p in self.record_files()? {
            let bytes = fs::read(&p).map_err(io_err(&p))?;
            let _ = writeln!(text, "{}\t{}\t{}", self.rel(&p), sha256_hex(&bytes), count_items(&p, &bytes));
        }
        let mp = self.root.join(MANIFEST);
        fs::write(&mp, text).map_err(io_err(&mp))
    }

    /// Checks every manifest line against the file contents.
    pub fn verify_manifest(&self) -> Result<usize, StoreError> {
        let mp = self.root.join(MANIFEST);
        let text = fs::read_to_string(&mp).map_err(io_err(&mp))?;
        let mut n = 0;
        for line in text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
            let cols: Vec<&str> = line.split('\t').collect();
            let [file, sum, _count] = cols.as_slice() else {
                return Err(StoreError::Manifest(line.to_string()));
            };
            let p = self.root.join(file);
            let bytes = fs::read(&p).map_err(io_err(&p))?;
            if sha256_hex(&bytes) != *sum {
                return Err(StoreError::Checksum(file.to_string()));
            }
            n += 1;
        }
        Ok(n)
    }
}

fn count_items(p: &Path, bytes: &[u8]) -> usize {
    let text = String::from_utf8_lossy(bytes);
    if p.extension().is_some_and(|e| e == "tsv") {
        text.lines().count().saturating_sub(1)
    } else {
        parse_records(&text).map(|r| r.len()).unwrap_or(0)
    }
}

#[derive(Serialize)]
struct JsonMark {
    role: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    edge: Option<[u32; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertex: Option<u32>,
}

#[derive(Serialize)]
struct JsonRecord {
    n: usize,
    rotations: Vec<Vec<u32>>,
    marks: Vec<JsonMark>,
    meta: BTreeMap<String, String>,
}

fn json_record(mg: &MarkedPlaneGraph, meta: BTreeMap<String, String>) -> JsonRecord {
    let g = mg.graph();
    let marks = mg
        .marks()
        .iter()
        .map(|m| match m.site {
            MarkSite::Face(d) => JsonMark { role: m.role.as_str(), edge: Some([g.tail(d), g.head(d)]), vertex: None },
            MarkSite::Vertex(v) => JsonMark { role: m.role.as_str(), edge: None, vertex: Some(v) },
        })
        .collect();
    JsonRecord { n: g.n(), rotations: g.rotations(), marks, meta }
}

/// Graphviz text for one graph; marked face edges are drawn bold and
/// marked vertices filled.
pub fn dot_record(mg: &MarkedPlaneGraph, name: &str) -> String {
    let g = mg.graph();
    let mut marked_edges: Vec<(u32, u32)> = (0..mg.marks().len()).flat_map(|i| mg.mark_edges(i)).collect();
    marked_edges.sort_unstable();
    let marked_vs = mg.marked_vertices();
    let mut s = format!("graph \"{name}\" {{\n");
    for v in 0..g.n() as u32 {
        if marked_vs.contains(&v) {
            let _ = writeln!(s, "  {v} [style=filled];");
        } else {
            let _ = writeln!(s, "  {v};");
        }
    }
    for (u, v) in g.edges() {
        if marked_edges.binary_search(&(u, v)).is_ok() {
            let _ = writeln!(s, "  {u} -- {v} [style=bold];");
        } else {
            let _ = writeln!(s, "  {u} -- {v};");
        }
    }
    s.push_str("}\n");
    s
}

/// Renders a family in the given format. Output is a pure function of
/// the stored files.
pub fn export(store: &CatalogStore, family: &str, format: ExportFormat) -> Result<String, StoreError> {
    let graphs = store.read_family(family)?;
    let meta = store.read_meta(family)?;
    Ok(match format {
        ExportFormat::Rotg => graphs.iter().map(write_record).collect(),
        ExportFormat::Json => {
            let recs: Vec<JsonRecord> =
                graphs.iter().enumerate().map(|(i, mg)| json_record(mg, meta.get(i).cloned().unwrap_or_default())).collect();
            let mut s = serde_json::to_string_pretty(&recs).expect("records serialize");
            s.push('\n');
            s
        }
        ExportFormat::Dot => graphs.iter().enumerate().map(|(i, mg)| dot_record(mg, &format!("{family}#{i}"))).collect(),
    })
}

/// Writes an export next to the family under `export/`.
pub fn export_to_file(store: &CatalogStore, family: &str, format: ExportFormat) -> Result<PathBuf, StoreError> {
    let text = export(store, family, format)?;
    let p = store.root().join("export").join(format!("{family}.{}", format.extension()));
    if let Some(dir) = p.parent() {
        fs::create_dir_all(dir).map_err(io_err(dir))?;
    }
    fs::write(&p, text).map_err(io_err(&p))?;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{Family, GenerationRecord, OpKind};
    use crate::cylgen::{class_c, identify_segments, SegmentSplit};
    use crate::embed::{canonical_key, IsoGroup};

    fn z1() -> MarkedPlaneGraph {
        let s = SegmentSplit { start: 0, first: 4, path: 0, second: 4, shared_edge: true };
        identify_segments(&MarkedPlaneGraph::bare_cycle(6), s).unwrap()
    }

    fn family(graphs: Vec<MarkedPlaneGraph>) -> Vec<Entry> {
        let mut f = Family::new("t", IsoGroup::Reflect);
        for g in graphs {
            f.put(g, GenerationRecord::new(OpKind::Loaded, "test"));
        }
        f.into_entries()
    }

    fn save(store: &CatalogStore, name: &str, entries: &[Entry]) {
        let rows: Vec<Vec<String>> = entries.iter().map(|e| vec![hex(&e.key), e.graph.graph().n().to_string()]).collect();
        store.write_family(name, entries, &["key", "n"], &rows).unwrap();
    }

    #[test]
    fn records_round_trip_to_the_same_keys() {
        let dir = tempfile::tempdir().unwrap();
        let store = CatalogStore::open(dir.path()).unwrap();
        let entries = family(vec![z1(), class_c(2), MarkedPlaneGraph::bare_cycle(7)]);
        save(&store, "cyl/sample", &entries);
        let back = store.read_family("cyl/sample").unwrap();
        let keys: Vec<Vec<u8>> = back.iter().map(|g| canonical_key(g, IsoGroup::Reflect)).collect();
        assert_eq!(keys, entries.iter().map(|e| e.key.clone()).collect::<Vec<_>>());
        let reexport = export(&store, "cyl/sample", ExportFormat::Rotg).unwrap();
        let again = parse_records(&reexport).unwrap();
        assert!(again.iter().zip(&entries).all(|(g, e)| canonical_key(g, IsoGroup::Reflect) == e.key));
        assert_eq!(store.read_meta("cyl/sample").unwrap()[1]["n"], "10");
    }

    #[test]
    fn json_carries_every_field() {
        let dir = tempfile::tempdir().unwrap();
        let store = CatalogStore::open(dir.path()).unwrap();
        save(&store, "cyl/z1", &family(vec![z1()]));
        let v: serde_json::Value = serde_json::from_str(&export(&store, "cyl/z1", ExportFormat::Json).unwrap()).unwrap();
        let r = &v[0];
        assert_eq!(r["n"], 6);
        assert_eq!(r["rotations"].as_array().unwrap().len(), 6);
        assert_eq!(r["marks"][0]["role"], "C1");
        assert_eq!(r["marks"][1]["edge"].as_array().unwrap().len(), 2);
        assert_eq!(r["meta"]["n"], "6");
    }

    #[test]
    fn dot_of_two_squares_sharing_an_edge() {
        let dot = dot_record(&z1(), "Z1");
        assert_eq!(dot.lines().filter(|l| l.trim_start().chars().next().is_some_and(|c| c.is_ascii_digit()) && !l.contains("--")).count(), 6);
        assert_eq!(dot.matches("--").count(), 7);
    }

    #[test]
    fn any_flipped_byte_is_caught() {
        let dir = tempfile::tempdir().unwrap();
        let store = CatalogStore::open(dir.path()).unwrap();
        save(&store, "disk/K7", &family(vec![MarkedPlaneGraph::bare_cycle(7)]));
        assert_eq!(store.verify_manifest().unwrap(), 2);
        let p = dir.path().join("disk/K7.rotg");
        let clean = fs::read(&p).unwrap();
        for i in 0..clean.len() {
            let mut bytes = clean.clone();
            bytes[i] ^= 0x01;
            fs::write(&p, &bytes).unwrap();
            assert!(matches!(store.verify_manifest(), Err(StoreError::Checksum(_))), "flip at byte {i} missed");
        }
        fs::write(&p, &clean).unwrap();
        assert!(store.verify_manifest().is_ok());
    }
}
