//! Shared full catalogs for the integration tests that need `K_16` and the
//! cylinder levels. Built once per process through the command-line
//! driver, so a failed build leaves a resumable store behind.
//!
//! `CRITATLAS_ACCEPTANCE_CATALOG` points at a prebuilt (or partially
//! built) store to reuse. Without it the store lives under the cargo
//! target directory; the acceptance binary rebuilds it from scratch and
//! later binaries in the same run reuse it.

#![allow(dead_code)]

use std::io::Write;
use std::path::PathBuf;
use std::sync::OnceLock;
use std::time::Instant;

use critatlas::catalog::CatalogStore;
use critatlas::cli::{self, BuildArgs, Cli, Command, CylCommand, DiskCommand};
use critatlas::cylgen::names::{assign_names, Naming};
use critatlas::cylgen::{CylinderCatalog, MAX_LEVEL};
use critatlas::diskgen::DiskCatalog;
use critatlas::embed::IsoGroup;

pub const MAX_LEN: usize = 16;

pub struct World {
    pub root: PathBuf,
    pub disk: DiskCatalog,
    pub cyl: CylinderCatalog,
    pub naming: Naming,
}

/// Writes straight to the process stdout so the line survives libtest's
/// output capture.
pub fn say(line: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
    let _ = out.flush();
}

/// One result line per checked claim.
pub fn report(tag: &str, ok: bool, detail: &str) {
    say(&format!("{tag}: {} {detail}", if ok { "PASS" } else { "FAIL" }));
}

fn run(root: &PathBuf, command: Command) {
    let c = Cli { root: root.clone(), iso: IsoGroup::Reflect, threads: None, command };
    let t = Instant::now();
    match cli::run(&c) {
        Ok(o) => say(&format!("[catalog] {} ({:.0}s)", o.summary, t.elapsed().as_secs_f64())),
        Err(e) => panic!("catalog build failed: {e}"),
    }
}

/// Full catalogs; `fresh` discards a default-location store first.
pub fn world(fresh: bool) -> &'static World {
    static WORLD: OnceLock<World> = OnceLock::new();
    WORLD.get_or_init(|| {
        let root = match std::env::var_os("CRITATLAS_ACCEPTANCE_CATALOG") {
            Some(p) => PathBuf::from(p),
            None => {
                let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance-catalog");
                if fresh && p.exists() {
                    std::fs::remove_dir_all(&p).expect("clear old catalog");
                }
                p
            }
        };
        say(&format!("[catalog] store {}", root.display()));
        run(&root, Command::Disk(DiskCommand::Build(BuildArgs { max: MAX_LEN })));
        run(&root, Command::Cyl(CylCommand::Glue { levels: MAX_LEVEL }));
        let store = CatalogStore::open(&root).expect("open store");
        let disk = cli::load_disk(&store, IsoGroup::Reflect).expect("load disk catalogs");
        let cyl = cli::load_cyl(&store, IsoGroup::Reflect).expect("load cylinder catalogs");
        let naming = assign_names(&cyl);
        World { root, disk, cyl, naming }
    })
}
