//! Command-line driver. Results go to the catalog directory, progress to
//! standard error, and one machine-readable summary line to standard
//! output. Exit status: 0 success, 1 count mismatch, 2 usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::catalog::{export_to_file, hex, CatalogStore, Entry, ExportFormat, StoreError};
use crate::color::{is_critical, oracle::is_critical_exhaustive};
use crate::cylgen::filters::{vertex_boundary_family, Filter};
use crate::cylgen::names::{assign_names, check_table, ctable_tsv, Naming};
use crate::cylgen::{chain_ok, class_c, is_class_c, CylEntry, CylinderCatalog, LevelReport};
use crate::diskgen::structure::{disk_flags, DiskFlags};
use crate::diskgen::DiskCatalog;
use crate::embed::{is_two_connected, IsoGroup};
use crate::expected;

#[derive(Debug, Parser)]
#[command(name = "critatlas", version, about = "Catalogs of critical plane graphs of girth five with precolored faces")]
pub struct Cli {
    /// Catalog directory.
    #[arg(long, default_value = "catalog", global = true)]
    pub root: PathBuf,
    /// Isomorphism group used for deduplication.
    #[arg(long, default_value = "reflect", global = true)]
    pub iso: IsoGroup,
    /// Worker threads; overrides CRITATLAS_THREADS.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Disk catalogs K_5 .. K_max.
    #[command(subcommand)]
    Disk(DiskCommand),
    /// Cylinder catalogs.
    #[command(subcommand)]
    Cyl(CylCommand),
    /// Emit the c-value tables as TSV.
    Ctable,
    /// Evaluate the six special filters on the cylinder catalog.
    Filters,
    /// Build class-C graphs and check them.
    Classc {
        #[arg(long, default_value_t = 6)]
        n: usize,
    },
    /// Export a stored family.
    Export {
        /// Family name, e.g. disk/K13 or cyl/level1.
        #[arg(long)]
        family: String,
        #[arg(long, default_value = "json")]
        format: ExportFormat,
    },
    /// Run the small-instance oracles.
    Selftest,
}

#[derive(Debug, Subcommand)]
pub enum DiskCommand {
    /// Build (or resume) the catalogs up to the given outer length.
    Build(BuildArgs),
    /// Filter for nontrivial members without short shortcuts.
    VerifyCrit16,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[arg(long, default_value_t = 16)]
    pub max: usize,
}

#[derive(Debug, Subcommand)]
pub enum CylCommand {
    /// Cylinder graphs without internal short cycles.
    Base,
    /// Glue base graphs into deeper levels.
    Glue {
        #[arg(long, default_value_t = 2)]
        levels: usize,
    },
}

/// Outcome of a command: the summary line and whether every published
/// count was matched.
pub struct Outcome {
    pub summary: String,
    pub ok: bool,
}

fn threads_from_env() -> Option<usize> {
    std::env::var("CRITATLAS_THREADS").ok().and_then(|s| s.parse().ok()).filter(|&n| n > 0)
}

pub fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let threads = cli.threads.or_else(threads_from_env).unwrap_or(0);
    if threads > 0 {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    match run(&cli) {
        Ok(o) => {
            println!("{}", o.summary);
            ExitCode::from(if o.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, StoreError> {
    let store = CatalogStore::open(&cli.root)?;
    match &cli.command {
        Command::Disk(DiskCommand::Build(a)) => disk_build(&store, cli.iso, a.max),
        Command::Disk(DiskCommand::VerifyCrit16) => disk_verify(&store, cli.iso),
        Command::Export { family, format } => {
            let p = export_to_file(&store, family, *format)?;
            Ok(Outcome { summary: format!("export family={family} path={}", p.display()), ok: true })
        }
        Command::Cyl(CylCommand::Base) => cyl_base(&store, cli.iso),
        Command::Cyl(CylCommand::Glue { levels }) => cyl_glue(&store, cli.iso, *levels),
        Command::Ctable => ctable(&store, cli.iso),
        Command::Filters => filters(&store, cli.iso),
        Command::Classc { n } => Ok(classc(*n)),
        Command::Selftest => Ok(selftest()),
    }
}

pub fn disk_family(i: usize) -> String {
    format!("disk/K{i}")
}

const DISK_META: [&str; 9] = ["key", "n", "m", "nontrivial", "shortcut2", "shortcut4", "adjacent_deg2", "derivations", "provenance"];

fn flag(b: bool) -> String {
    (b as u8).to_string()
}

fn disk_rows(entries: &[Entry]) -> Vec<Vec<String>> {
    entries
        .iter()
        .map(|e| {
            let f: DiskFlags = disk_flags(&e.graph);
            vec![
                hex(&e.key),
                e.graph.graph().n().to_string(),
                e.graph.graph().m().to_string(),
                flag(f.nontrivial),
                flag(f.shortcut2),
                flag(f.shortcut4),
                flag(f.adjacent_degree2),
                e.derivations.to_string(),
                e.provenance.to_string(),
            ]
        })
        .collect()
}

/// Loads saved levels `5..` as long as they are contiguous.
pub fn load_disk(store: &CatalogStore, group: IsoGroup) -> Result<DiskCatalog, StoreError> {
    let mut levels = Vec::new();
    let mut i = 5;
    while store.has_family(&disk_family(i)) {
        levels.push(store.read_family(&disk_family(i))?);
        i += 1;
    }
    if levels.is_empty() {
        Ok(DiskCatalog::new(group))
    } else {
        Ok(DiskCatalog::from_graphs(group, levels))
    }
}

fn disk_build(store: &CatalogStore, group: IsoGroup, max: usize) -> Result<Outcome, StoreError> {
    if max > 16 {
        log::warn!("outer lengths above 16 are experimental");
    }
    let mut cat = load_disk(store, group)?;
    for i in 5..=cat.max_len() {
        if !store.has_family(&disk_family(i)) {
            store.write_family(&disk_family(i), cat.level(i), &DISK_META, &disk_rows(cat.level(i)))?;
        }
    }
    while cat.max_len() < max {
        let t = std::time::Instant::now();
        let rep = cat.build_next();
        for (op, f) in &rep.funnel {
            log::info!(
                "K{} {op}: generated {} invalid {} short-cycle {} duplicate {} tested {} critical {}",
                rep.length,
                f.generated,
                f.invalid,
                f.short_cycle,
                f.duplicate,
                f.tested,
                f.critical
            );
        }
        log::info!("K{}: {} members, {} J rounds, {:.1}s", rep.length, rep.count, rep.j_rounds, t.elapsed().as_secs_f64());
        let i = rep.length;
        store.write_family(&disk_family(i), cat.level(i), &DISK_META, &disk_rows(cat.level(i)))?;
    }
    let mut ok = true;
    let mut parts = vec!["disk build".to_string()];
    for i in 5..=max.min(cat.max_len()) {
        let n = cat.level(i).len();
        let exp = expected::DISK_COUNTS.iter().find(|(l, _)| *l == i).map(|&(_, c)| c);
        match exp {
            Some(c) if c != n => {
                ok = false;
                parts.push(format!("K{i}={n}(expected {c})"));
            }
            _ => parts.push(format!("K{i}={n}")),
        }
    }
    parts.push(format!("status={}", if ok { "ok" } else { "mismatch" }));
    Ok(Outcome { summary: parts.join(" "), ok })
}

/// Per-length survivor counts of the two filters, plus 2-connectivity of
/// the shortcut-free survivors.
pub struct FilterReport {
    pub sparse: Vec<(usize, usize)>,
    pub shortcut_free: Vec<(usize, usize)>,
    pub survivors_two_connected: bool,
}

pub fn filter_report(cat: &DiskCatalog) -> FilterReport {
    let mut sparse = Vec::new();
    let mut free = Vec::new();
    let mut conn = true;
    for i in 5..=cat.max_len() {
        let flags: Vec<(DiskFlags, &Entry)> = cat.level(i).iter().map(|e| (disk_flags(&e.graph), e)).collect();
        sparse.push((i, flags.iter().filter(|(f, _)| f.sparse()).count()));
        let survivors: Vec<&Entry> = flags.iter().filter(|(f, _)| f.shortcut_free()).map(|(_, e)| *e).collect();
        conn &= survivors.iter().all(|e| is_two_connected(e.graph.graph()));
        free.push((i, survivors.len()));
    }
    FilterReport { sparse, shortcut_free: free, survivors_two_connected: conn }
}

fn disk_verify(store: &CatalogStore, group: IsoGroup) -> Result<Outcome, StoreError> {
    let cat = load_disk(store, group)?;
    let rep = filter_report(&cat);
    let mut ok = rep.survivors_two_connected;
    let mut parts = vec!["disk verify-crit16".to_string()];
    for &(i, n) in &rep.shortcut_free {
        let exp = expected::DISK_SHORTCUT_FREE.iter().find(|(l, _)| *l == i).map(|&(_, c)| c);
        if exp.is_some_and(|c| c != n) {
            ok = false;
        }
        parts.push(format!("free{i}={n}"));
    }
    for &(i, n) in &rep.sparse {
        let exp = expected::DISK_SPARSE_COUNTS.iter().find(|(l, _)| *l == i).map(|&(_, c)| c);
        if exp.is_some_and(|c| c != n) {
            ok = false;
        }
        if i >= 13 {
            parts.push(format!("sparse{i}={n}"));
        }
    }
    parts.push(format!("two_connected={}", rep.survivors_two_connected));
    parts.push(format!("status={}", if ok { "ok" } else { "mismatch" }));
    Ok(Outcome { summary: parts.join(" "), ok })
}

pub fn cyl_family(k: usize) -> String {
    format!("cyl/level{k}")
}

const CYL_META: [&str; 12] =
    ["key", "name", "l1", "l2", "distance", "c12", "c21", "class_c", "separating", "n", "derivations", "provenance"];

fn cyl_rows(level: usize, entries: &[CylEntry], naming: &Naming) -> Vec<Vec<String>> {
    entries
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let m = &e.meta;
            vec![
                hex(&e.entry.key),
                naming.label(level, i),
                m.lengths.0.to_string(),
                m.lengths.1.to_string(),
                m.distance.to_string(),
                m.c.0.to_string(),
                m.c.1.to_string(),
                flag(m.class_c),
                m.separating.to_string(),
                e.entry.graph.graph().n().to_string(),
                e.entry.derivations.to_string(),
                e.entry.provenance.to_string(),
            ]
        })
        .collect()
}

fn write_cyl(store: &CatalogStore, cat: &CylinderCatalog) -> Result<(), StoreError> {
    let naming = assign_names(cat);
    for k in 0..=cat.depth() {
        let es = cat.level(k);
        let entries: Vec<Entry> = es.iter().map(|e| e.entry.clone()).collect();
        store.write_family(&cyl_family(k), &entries, &CYL_META, &cyl_rows(k, es, &naming))?;
    }
    Ok(())
}

fn log_level(rep: &LevelReport) {
    log::info!(
        "cylinder level {}: generated {} invalid {} short-cycle {} pruned {} duplicate {} tested {} critical {} class-C {}",
        rep.level,
        rep.generated,
        rep.invalid,
        rep.short_cycle,
        rep.pruned,
        rep.duplicate,
        rep.tested,
        rep.critical,
        rep.class_c
    );
}

/// Loads stored cylinder levels; builds level 0 from the disk catalogs if
/// none are stored.
pub fn load_cyl(store: &CatalogStore, group: IsoGroup) -> Result<CylinderCatalog, StoreError> {
    let mut levels = Vec::new();
    while store.has_family(&cyl_family(levels.len())) {
        levels.push(store.read_family(&cyl_family(levels.len()))?);
    }
    if !levels.is_empty() {
        return Ok(CylinderCatalog::from_levels(group, levels));
    }
    let disk = load_disk(store, group)?;
    if disk.max_len() < crate::cylgen::MAX_CUT_LEN {
        return Err(StoreError::Manifest(format!(
            "cylinder level 0 needs disk catalogs up to K{}; run `disk build` first",
            crate::cylgen::MAX_CUT_LEN
        )));
    }
    let (cat, rep) = CylinderCatalog::from_disk(&disk);
    log_level(&rep);
    write_cyl(store, &cat)?;
    Ok(cat)
}

fn base_summary(cat: &CylinderCatalog) -> (Vec<String>, bool) {
    let base = cat.level(0);
    let d3 = base.iter().filter(|e| e.meta.distance == 3).count();
    let dmax = base.iter().map(|e| e.meta.distance).max().unwrap_or(0);
    let ok = base.len() == expected::CYL_BASE_COUNT && d3 == expected::CYL_BASE_DISTANCE3 && dmax <= 3;
    (vec![format!("base={}", base.len()), format!("distance3={d3}"), format!("max_distance={dmax}")], ok)
}

fn cyl_base(store: &CatalogStore, group: IsoGroup) -> Result<Outcome, StoreError> {
    let cat = load_cyl(store, group)?;
    let (parts, ok) = base_summary(&cat);
    Ok(Outcome { summary: format!("cyl base {} status={}", parts.join(" "), status(ok)), ok })
}

fn status(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "mismatch"
    }
}

/// Non-class-C members at levels 3 and deeper.
pub fn deep_non_class_c(cat: &CylinderCatalog) -> usize {
    (3..=cat.depth()).map(|k| cat.level(k).iter().filter(|e| !e.meta.class_c).count()).sum()
}

fn cyl_glue(store: &CatalogStore, group: IsoGroup, levels: usize) -> Result<Outcome, StoreError> {
    let mut cat = load_cyl(store, group)?;
    if cat.depth() < levels {
        for k in cat.depth() + 1..=levels {
            let t = std::time::Instant::now();
            let rep = cat.build_next();
            log_level(&rep);
            log::info!("level {k} took {:.1}s", t.elapsed().as_secs_f64());
        }
        write_cyl(store, &cat)?;
    }
    let (mut parts, mut ok) = base_summary(&cat);
    for k in 1..=levels.min(cat.depth()) {
        let n = cat.level(k).len();
        let cc = cat.level(k).iter().filter(|e| e.meta.class_c).count();
        if let Some(&(_, c)) = expected::CYL_LEVEL_COUNTS.iter().find(|(l, _)| *l == k) {
            ok &= c == n;
        }
        parts.push(format!("L{k}={n}(class_c={cc})"));
    }
    if cat.depth() >= 4 {
        let deep = deep_non_class_c(&cat);
        ok &= deep == expected::CYL_DEEP_COUNT;
        parts.push(format!("deep_non_class_c={deep}"));
    }
    Ok(Outcome { summary: format!("cyl glue {} status={}", parts.join(" "), status(ok)), ok })
}

fn ctable(store: &CatalogStore, group: IsoGroup) -> Result<Outcome, StoreError> {
    let cat = load_cyl(store, group)?;
    let naming = assign_names(&cat);
    let path = store.root().join("ctable.tsv");
    std::fs::write(&path, ctable_tsv(&cat, &naming)).map_err(|source| StoreError::Io { path: path.clone(), source })?;
    let mut ok = true;
    let mut parts = vec!["ctable".to_string()];
    for k in 0..=cat.depth().min(2) {
        let Some(t) = check_table(&cat, &naming, k) else { continue };
        ok &= t.c_pairs_match;
        parts.push(format!(
            "L{k}:members={}/{} c_pairs={} named={} ambiguous={} unnamed={} unmatched_rows={}",
            t.members,
            t.rows,
            if t.c_pairs_match { "match" } else { "differ" },
            t.named,
            t.ambiguous.len(),
            t.unnamed.len(),
            if t.hints.is_empty() {
                "-".to_string()
            } else {
                t.hints.iter().map(|(r, same)| format!("{r}~{}", if same.is_empty() { "?".into() } else { same.join("/") })).collect::<Vec<_>>().join(",")
            }
        ));
    }
    parts.push(format!("path={}", path.display()));
    parts.push(format!("status={}", status(ok)));
    Ok(Outcome { summary: parts.join(" "), ok })
}

/// Labels of the members passing one filter.
pub struct FilterHits {
    pub filter: Filter,
    pub labels: Vec<String>,
    /// Every label names a member of the published list, and the sizes agree.
    pub matches: bool,
}

pub fn filter_hits(cat: &CylinderCatalog) -> Vec<FilterHits> {
    let naming = assign_names(cat);
    let mut domain: Vec<(String, &crate::embed::MarkedPlaneGraph)> = cat
        .all()
        .filter(|(_, e)| !e.meta.trivial)
        .map(|(k, e)| {
            let i = cat.level(k).iter().position(|x| x.entry.key == e.entry.key).unwrap();
            (naming.label(k, i), &e.entry.graph)
        })
        .collect();
    let js = vertex_boundary_family(cat);
    for e in &js {
        domain.push(("J".to_string(), &e.graph));
    }
    Filter::ALL
        .iter()
        .map(|&f| {
            let labels: Vec<String> = domain.iter().filter(|(_, g)| f.holds(g)).map(|(l, _)| l.clone()).collect();
            let list = expected::FILTER_LISTS.iter().find(|(c, _)| *c == f.letter()).unwrap().1;
            let known = |l: &str| l.split('|').any(|x| list.contains(&x) || (x == "J" && list.iter().any(|n| n.starts_with('J'))));
            let matches = labels.len() == list.len() && labels.iter().all(|l| l.starts_with('L') || known(l));
            FilterHits { filter: f, labels, matches }
        })
        .collect()
}

fn filters(store: &CatalogStore, group: IsoGroup) -> Result<Outcome, StoreError> {
    let cat = load_cyl(store, group)?;
    let hits = filter_hits(&cat);
    let mut tsv = String::from("filter\tmembers\n");
    let mut parts = vec!["filters".to_string()];
    let mut ok = true;
    for h in &hits {
        tsv.push_str(&format!("{}\t{}\n", h.filter.letter(), h.labels.join(",")));
        parts.push(format!("{}={}", h.filter.letter(), h.labels.len()));
        ok &= h.matches;
    }
    let path = store.root().join("filters.tsv");
    std::fs::write(&path, tsv).map_err(|source| StoreError::Io { path: path.clone(), source })?;
    parts.push(format!("path={}", path.display()));
    parts.push(format!("status={}", status(ok)));
    Ok(Outcome { summary: parts.join(" "), ok })
}

fn classc(n: usize) -> Outcome {
    let mut ok = true;
    let mut parts = vec!["classc".to_string()];
    for k in 1..=n {
        let g = class_c(k);
        let good = is_class_c(&g) && chain_ok(&g, k - 1) && is_critical(&g);
        ok &= good;
        parts.push(format!("n{k}:v={},critical={}", g.graph().n(), good));
    }
    parts.push(format!("status={}", status(ok)));
    Outcome { summary: parts.join(" "), ok }
}

/// Criticality agrees with the exhaustive oracle on small disk graphs and
/// on the first class-C graphs.
fn selftest() -> Outcome {
    let mut disk = DiskCatalog::new(IsoGroup::Reflect);
    disk.build_up_to(10);
    let mut checked = 0;
    let mut ok = true;
    for l in 5..=10 {
        for e in disk.level(l) {
            if let Some(x) = is_critical_exhaustive(&e.graph) {
                checked += 1;
                ok &= x;
            }
        }
    }
    for k in 1..=2 {
        if let Some(x) = is_critical_exhaustive(&class_c(k)) {
            checked += 1;
            ok &= x;
        }
    }
    let counts: Vec<usize> = (5..=10).map(|l| disk.level(l).len()).collect();
    ok &= counts == [1, 1, 1, 2, 3, 6];
    Outcome { summary: format!("selftest oracle_checked={checked} disk5_10={counts:?} status={}", status(ok)), ok }
}
