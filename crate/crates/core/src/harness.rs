//! Command implementations behind the `g6` binary. Each command returns a
//! [`Report`]: a JSON document with a schema version, timings kept apart from
//! the payload, and an overall pass flag.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cache::CacheDir;
use crate::context::G6;
use crate::error::{Error, Result};
use crate::group::{self, g6, g422_check, g4_check, ElementId, ReflClass};
use crate::hurwitz::{
    count_factorizations, enumerate_factorizations, orbit_bfs, packed, pair_orbit_walk,
    verify_theorem_at_length, ClassSignature, LengthReport, OrbitOptions, DEFAULT_STATE_CAP,
};
use crate::matrix::Mat2;
use crate::normalize::Normalizer;
use crate::par::{self, Exec};
use crate::parse::parse_factorization;

pub const REPORT_SCHEMA_VERSION: &str = "1";
pub const MIN_STATE_CAP: usize = 10_000;
pub const MAX_VERIFY_LEN: usize = 8;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoxeterChoice {
    /// Only `C = A B`.
    #[default]
    DefaultAb,
    /// Each of the four Coxeter elements in turn.
    AllFour,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    /// `None` disables the on-disk cache.
    pub cache_dir: Option<PathBuf>,
    pub threads: usize,
    pub state_cap: usize,
    pub coxeter_choice: CoxeterChoice,
    /// `None` writes to standard output.
    pub output: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            cache_dir: None,
            threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
            state_cap: DEFAULT_STATE_CAP,
            coxeter_choice: CoxeterChoice::DefaultAb,
            output: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.threads == 0 {
            return Err(Error::Config("threads must be at least 1".into()));
        }
        if self.state_cap < MIN_STATE_CAP {
            return Err(Error::Config(format!(
                "state cap must be at least {MIN_STATE_CAP}, got {}",
                self.state_cap
            )));
        }
        Ok(())
    }

    fn cache(&self) -> Option<CacheDir> {
        self.cache_dir.as_ref().map(CacheDir::new)
    }

    fn orbit_options(&self) -> OrbitOptions {
        OrbitOptions {
            state_cap: self.state_cap,
            want_paths: false,
            exec: if self.threads > 1 { Exec::Parallel } else { Exec::Sequential },
        }
    }

    /// Runs `f` on a pool with `threads` workers.
    fn run<R: Send>(&self, f: impl FnOnce() -> Result<R> + Send) -> Result<R> {
        self.validate()?;
        par::with_threads(self.threads, f)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub schema_version: String,
    pub timings_ms: BTreeMap<String, f64>,
    pub pass: bool,
    pub payload: Value,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Writes to `cfg.output`, or standard output.
    pub fn write(&self, cfg: &RunConfig) -> Result<()> {
        let text = self.to_json() + "\n";
        match &cfg.output {
            Some(path) => fs::write(path, text).map_err(|e| Error::Cache {
                path: path.clone(),
                source: e,
            }),
            None => {
                let mut out = std::io::stdout().lock();
                out.write_all(text.as_bytes())
                    .and_then(|_| out.flush())
                    .map_err(|e| Error::Cache {
                        path: PathBuf::from("<stdout>"),
                        source: e,
                    })
            }
        }
    }
}

struct Timer {
    timings: BTreeMap<String, f64>,
}

impl Timer {
    fn new() -> Timer {
        Timer {
            timings: BTreeMap::new(),
        }
    }

    fn time<R>(&mut self, label: impl Into<String>, f: impl FnOnce() -> R) -> R {
        let start = Instant::now();
        let r = f();
        self.timings.insert(label.into(), start.elapsed().as_secs_f64() * 1e3);
        r
    }

    fn report(self, command: &str, pass: bool, payload: Value) -> Report {
        Report {
            command: command.to_string(),
            schema_version: REPORT_SCHEMA_VERSION.to_string(),
            timings_ms: self.timings,
            pass,
            payload,
        }
    }
}

/// Builds G6, through the table cache when one is configured.
pub fn load_g6(cfg: &RunConfig) -> Result<G6> {
    match cfg.cache() {
        Some(cache) => G6::from_table(cache.group_table(&g6::generators())?),
        None => G6::build(),
    }
}

fn targets(cfg: &RunConfig, g: &G6) -> Vec<ElementId> {
    match cfg.coxeter_choice {
        CoxeterChoice::DefaultAb => vec![g.coxeter()],
        CoxeterChoice::AllFour => g.table().coxeter_ids().to_vec(),
    }
}

fn histogram<K: Ord>(items: impl IntoIterator<Item = K>) -> BTreeMap<K, usize> {
    let mut h = BTreeMap::new();
    for k in items {
        *h.entry(k).or_insert(0) += 1;
    }
    h
}

#[derive(Clone, Debug, Serialize)]
struct ReflectionRow {
    index: usize,
    id: ElementId,
    class: ReflClass,
    #[serde(skip_serializing_if = "Option::is_none")]
    sub_class: Option<u8>,
    matrix: String,
}

/// Structural facts about G6 and the checks they must satisfy.
///
/// `conjugator` replaces the default change of basis used for the G(4,2,2) check.
pub fn cmd_facts(cfg: &RunConfig, conjugator: Option<&Mat2>) -> Result<Report> {
    cfg.run(|| {
        let mut timer = Timer::new();
        let g = timer.time("build", || load_g6(cfg))?;
        let table = g.table();
        let sys = g.system();

        let class_sizes: BTreeMap<String, usize> = ReflClass::ALL
            .iter()
            .map(|&c| (c.to_string(), sys.class_members(c).len()))
            .collect();
        let reflections: Vec<ReflectionRow> = sys
            .all()
            .map(|r| ReflectionRow {
                index: r.index(),
                id: sys.element(r),
                class: sys.class(r),
                sub_class: sys.sub_class(r),
                matrix: table.element(sys.element(r)).to_string(),
            })
            .collect();
        let mut subclass_partition: BTreeMap<String, Vec<usize>> = BTreeMap::new();
        for r in sys.all() {
            if let Some(s) = sys.sub_class(r) {
                subclass_partition.entry(format!("S{s}")).or_default().push(r.index());
            }
        }
        let orders = histogram(table.ids().map(|x| table.order(x)));
        let determinants = histogram(table.ids().map(|x| table.det(x).to_string()));
        let conjugacy_class_count = group::conjugacy_classes(table).len();

        let (a, b) = (g6::generator_a(), g6::generator_b());
        let braid_relation_ok = a.mul(&b).pow(3) == b.mul(&a).pow(3);

        let g4 = timer.time("g4", || g4_check(table))?;
        let m = conjugator.cloned().unwrap_or_else(g6::change_of_basis);
        let g422 = timer.time("g422", || g422_check(table, &m))?;

        // pair orbits under forward moves, by ordered class pair
        let mut census: BTreeMap<String, BTreeMap<usize, usize>> = BTreeMap::new();
        let mut inverse_pairs_ok = true;
        let mut mixed_pairs_ok = true;
        let mut rs_pairs_ok = true;
        timer.time("pair_orbits", || {
            for x in sys.all() {
                for y in sys.all() {
                    let len = pair_orbit_walk(sys, x, y);
                    let (cx, cy) = (sys.class(x), sys.class(y));
                    *census
                        .entry(format!("{cx}x{cy}"))
                        .or_default()
                        .entry(len)
                        .or_insert(0) += 1;
                    let rprime = |c: ReflClass| c != ReflClass::S;
                    if cx != cy && rprime(cx) && rprime(cy) {
                        let want = if sys.inverse(x) == y { 2 } else { 4 };
                        if len != want {
                            if want == 2 {
                                inverse_pairs_ok = false;
                            } else {
                                mixed_pairs_ok = false;
                            }
                        }
                    }
                    if rprime(cx) != rprime(cy) && len != 6 {
                        rs_pairs_ok = false;
                    }
                }
            }
        });

        let coxeter: Vec<Value> = table
            .coxeter_ids()
            .iter()
            .map(|&c| {
                json!({
                    "id": c,
                    "matrix": table.element(c).to_string(),
                    "order": table.order(c),
                    "det": table.det(c).to_string(),
                })
            })
            .collect();
        let ab = g.coxeter();
        let orders_divide_12 = orders.keys().all(|o| 12 % o == 0);

        let checks: BTreeMap<&str, bool> = BTreeMap::from([
            ("group_order_48", table.len() == 48),
            ("reflections_14", sys.len() == 14),
            ("class_sizes_4_4_6", class_sizes.values().copied().collect::<Vec<_>>() == [4, 4, 6]),
            ("subclasses_3_of_2", subclass_partition.len() == 3 && subclass_partition.values().all(|v| v.len() == 2)),
            ("braid_relation", braid_relation_ok),
            ("orders_divide_12", orders_divide_12),
            ("coxeter_count_4", table.coxeter_ids().len() == 4),
            ("coxeter_number_12", table.coxeter_number() == 12),
            ("ab_is_coxeter", table.coxeter_ids().contains(&ab)),
            ("ab_order_is_coxeter_number", table.order(ab) == table.coxeter_number()),
            ("g4", g4.ok()),
            ("g422", g422.ok),
            ("inverse_pair_orbits_2", inverse_pairs_ok),
            ("r1_r2_pair_orbits_4", mixed_pairs_ok),
            ("rprime_s_pair_orbits_6", rs_pairs_ok),
        ]);
        let pass = checks.values().all(|&c| c);

        let mut payload = json!({
            "group_order": table.len(),
            "num_reflections": sys.len(),
            "class_sizes": class_sizes,
            "subclass_partition": subclass_partition,
            "reflections": reflections,
            "conjugacy_class_count": conjugacy_class_count,
            "orders": orders,
            "determinants": determinants,
            "braid_relation_ok": braid_relation_ok,
            "g4_order": g4.order,
            "g4": g4,
            "g422_ok": g422.ok,
            "g422": g422,
            "orientation": g422.orientation,
            "pair_orbit_lengths": census,
            "coxeter_ids": table.coxeter_ids(),
            "coxeter_count": table.coxeter_ids().len(),
            "coxeter_number": table.coxeter_number(),
            "coxeter_ab": ab,
            "checks": checks,
        });
        if cfg.coxeter_choice == CoxeterChoice::AllFour {
            payload["coxeter_elements"] = Value::Array(coxeter);
        }
        Ok(timer.report("facts", pass, payload))
    })
}

#[derive(Clone, Debug, Serialize)]
struct TargetVerification {
    target: ElementId,
    matrix: String,
    pass: bool,
    lengths: Vec<LengthReport>,
}

/// Orbit verification for every length `2..=max_len`.
pub fn cmd_verify(cfg: &RunConfig, max_len: usize) -> Result<Report> {
    if !(2..=MAX_VERIFY_LEN).contains(&max_len) {
        return Err(Error::Config(format!(
            "--max-len must be between 2 and {MAX_VERIFY_LEN}, got {max_len}"
        )));
    }
    cfg.run(|| {
        let mut timer = Timer::new();
        let g = timer.time("build", || load_g6(cfg))?;
        let opts = cfg.orbit_options();
        let mut results = Vec::new();
        for target in targets(cfg, &g) {
            let mut lengths = Vec::new();
            for len in 2..=max_len {
                let label = format!("target{}_len{len}", target.0);
                lengths.push(timer.time(label, || verify_theorem_at_length(&g, target, len, &opts))?);
            }
            results.push(TargetVerification {
                target,
                matrix: g.table().element(target).to_string(),
                pass: lengths.iter().all(|l| l.pass),
                lengths,
            });
        }
        let pass = results.iter().all(|r| r.pass);
        let payload = json!({
            "max_len": max_len,
            "coxeter_choice": cfg.coxeter_choice,
            "targets": results,
            "pass": pass,
        });
        Ok(timer.report("verify", pass, payload))
    })
}

const ORBIT_SAMPLE: usize = 5;

/// Orbit of the standard factorization with signature `sig`, cross-checked
/// against enumeration and the counting recurrence.
pub fn cmd_orbit(cfg: &RunConfig, sig: ClassSignature, len: usize) -> Result<Report> {
    if sig.len() != len {
        return Err(Error::Config(format!(
            "signature {sig} has length {}, but --len is {len}",
            sig.len()
        )));
    }
    if len > MAX_VERIFY_LEN {
        return Err(Error::LengthCap {
            len,
            cap: MAX_VERIFY_LEN,
        });
    }
    if !sig.is_admissible() {
        return Err(Error::InadmissibleSignature { sig });
    }
    cfg.run(|| {
        let mut timer = Timer::new();
        let g = timer.time("build", || load_g6(cfg))?;
        let sys = g.system();
        let std = g.standard_factorization(sig)?;
        let opts = cfg.orbit_options();
        let orbit = timer.time("orbit", || orbit_bfs(sys, &std, &opts))?;
        let enumeration = timer.time("enumerate", || enumerate_factorizations(sys, g.coxeter(), len, opts.exec))?;
        let dp_count = timer.time("count", || count_factorizations(sys, g.coxeter(), sig));
        let enum_count = enumeration.count(&sig);
        let sample: Vec<String> = orbit
            .members
            .iter()
            .take(ORBIT_SAMPLE)
            .map(|&c| {
                packed::unpack(c, len)
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        let pass = orbit.size() == enum_count && dp_count == enum_count as u128;
        let payload = json!({
            "signature": sig,
            "length": len,
            "standard": std.to_string(),
            "orbit_size": orbit.size(),
            "enum_count": enum_count,
            "dp_count": dp_count.to_string(),
            "sample": sample,
            "pass": pass,
        });
        Ok(timer.report("orbit", pass, payload))
    })
}

/// Explicit moves from the given factorization to its standard form.
pub fn cmd_normalize(cfg: &RunConfig, text: &str) -> Result<Report> {
    cfg.run(|| {
        let mut timer = Timer::new();
        let g = timer.time("build", || load_g6(cfg))?;
        let f = parse_factorization(&g, text)?;
        let normalizer = Normalizer::with_cache(&g, cfg.cache(), cfg.state_cap);
        let trace = timer.time("normalize", || normalizer.normalize(&f))?;
        let standard = g.standard_factorization(trace.standard)?;
        let verified = f.replay(g.system(), &trace.moves)? == standard;
        let payload = json!({
            "input": f.to_string(),
            "input_text": text,
            "signature": trace.standard,
            "standard": standard.to_string(),
            "moves": trace.moves,
            "move_count": trace.moves.len(),
            "verified": verified,
            "recursion_depth": trace.recursion_depth,
            "strategy_log": trace.strategy_log,
        });
        Ok(timer.report("normalize", verified, payload))
    })
}

/// Deletes cache files from the configured directory.
pub fn cmd_cache_clear(cfg: &RunConfig) -> Result<Report> {
    cfg.validate()?;
    let cache = cfg
        .cache()
        .ok_or_else(|| Error::Config("no cache directory configured".into()))?;
    let mut timer = Timer::new();
    let removed = timer.time("clear", || cache.clear())?;
    let payload = json!({
        "cache_dir": cache.path().display().to_string(),
        "removed": removed,
    });
    Ok(timer.report("cache clear", true, payload))
}
