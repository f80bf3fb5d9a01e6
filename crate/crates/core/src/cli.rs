//! Command-line driver. `run` takes argv and two sinks so it can be tested
//! without spawning a process.
//!
//! Exit codes: 0 success, 1 negative answer (or no answer within budget),
//! 2 usage or input error. Timing goes to stderr only, so stdout is a pure
//! function of argv.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::catalog::{catalog, entry_json, verify_catalog};
use crate::enumerate::{enumerate_with, sweep, CellOutcome, EnumOptions};
use crate::error::EnumError;
use crate::facetype::{integral_euler, FaceSequence};
use crate::group::identify_group_capped;
use crate::group::IDENTIFY_CAP;
use crate::invariants::{char_poly, common_neighbor_graph, edge_graph, invariant_fingerprint};
use crate::io::{export_dot, load_map, GraphKind, MapFile};
use crate::iso::are_isomorphic;
use crate::map::{euler_characteristic, face_sequence_at, PolyhedralMap};
use crate::symmetry::{automorphism_group, face_orbits, orientability, vertex_orbits, Orientability};

#[derive(Parser, Debug)]
#[command(name = "semcensus", version, about = "Census engine for semi-equivelar maps")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// All maps of one type on a fixed number of vertices, up to isomorphism.
    Enumerate {
        /// Face sequence, e.g. 3,4,4,4,4 or 3^4,4^2.
        #[arg(long = "type")]
        face_type: FaceSequence,
        #[arg(long)]
        vertices: usize,
        /// Only report maps with this Euler characteristic.
        #[arg(long, allow_hyphen_values = true)]
        chi: Option<i64>,
        /// Give up after this many search nodes.
        #[arg(long)]
        budget: Option<u64>,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Also write the result to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Class counts for every admissible type up to a vertex bound.
    Sweep {
        #[arg(long = "max-vertices")]
        max_vertices: usize,
        #[arg(long, allow_hyphen_values = true)]
        chi: i64,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Euler characteristic, type, orientability and optional graph data.
    Invariants {
        file: PathBuf,
        /// Include the edge list of the common-neighbor graph G_i.
        #[arg(long)]
        gi: Vec<usize>,
        #[arg(long)]
        charpoly: bool,
        #[arg(long)]
        fingerprint: bool,
    },
    /// Exit 0 and print a witness if the two maps are isomorphic.
    Isomorphic { a: PathBuf, b: PathBuf },
    /// Automorphism group: order, name, generators and orbits.
    Aut { file: PathBuf },
    /// Exit 0 if the map is orientable, 1 if not.
    Orientable { file: PathBuf },
    /// Recompute every catalog entry and compare with the recorded claims.
    VerifyCatalog,
    /// List catalog entries, or print one entry as a map file.
    Catalog { name: Option<String> },
    /// Write the edge graph or a G_i graph in DOT format.
    ExportDot {
        file: PathBuf,
        /// edge, or g<i> for G_i.
        #[arg(long, default_value = "edge")]
        graph: GraphKind,
    },
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let started = Instant::now();
    let code = match dispatch(cli.cmd, out, err) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    };
    let _ = writeln!(err, "elapsed: {} ms", started.elapsed().as_millis());
    code
}

fn load(path: &Path) -> Result<MapFile, String> {
    load_map(path).map_err(|e| e.to_string())
}

/// Pretty JSON with sorted keys, keeping arrays of scalars (faces, edges)
/// on one line.
pub fn render_json(v: &Value) -> String {
    fn go(v: &Value, depth: usize, s: &mut String) {
        let pad = "  ".repeat(depth + 1);
        match v {
            Value::Array(xs) if xs.iter().all(|x| !x.is_array() && !x.is_object()) => {
                let parts: Vec<String> = xs.iter().map(Value::to_string).collect();
                s.push('[');
                s.push_str(&parts.join(","));
                s.push(']');
            }
            Value::Array(xs) => {
                s.push_str("[\n");
                for (i, x) in xs.iter().enumerate() {
                    s.push_str(&pad);
                    go(x, depth + 1, s);
                    s.push_str(if i + 1 < xs.len() { ",\n" } else { "\n" });
                }
                s.push_str(&"  ".repeat(depth));
                s.push(']');
            }
            Value::Object(m) if !m.is_empty() => {
                s.push_str("{\n");
                for (i, (k, x)) in m.iter().enumerate() {
                    s.push_str(&pad);
                    s.push_str(&Value::String(k.clone()).to_string());
                    s.push_str(": ");
                    go(x, depth + 1, s);
                    s.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
                }
                s.push_str(&"  ".repeat(depth));
                s.push('}');
            }
            other => s.push_str(&other.to_string()),
        }
    }
    let mut s = String::new();
    go(v, 0, &mut s);
    s.push('\n');
    s
}

fn emit(out: &mut dyn Write, v: &Value) -> Result<(), String> {
    out.write_all(render_json(v).as_bytes()).map_err(|e| e.to_string())
}

fn faces_json(m: &PolyhedralMap) -> Value {
    json!(m.faces)
}

fn map_summary(m: &PolyhedralMap) -> Value {
    let aut = automorphism_group(m);
    json!({
        "aut_order": aut.order_u64(),
        "faces": faces_json(m),
        "orientable": orientability(m) == Orientability::Orientable,
    })
}

fn dispatch(cmd: Cmd, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    match cmd {
        Cmd::Enumerate { face_type, vertices, chi, budget, jobs, out: file } => {
            let actual = integral_euler(&face_type, vertices);
            let mut doc = json!({
                "chi": actual,
                "type": face_type.to_string(),
                "vertices": vertices,
            });
            let reps = if chi.is_some() && chi != actual {
                let _ = writeln!(err, "note: type {face_type} on {vertices} vertices cannot have chi {}", chi.unwrap_or(0));
                Vec::new()
            } else {
                let opts = EnumOptions { budget, jobs, ..EnumOptions::default() };
                match enumerate_with(&face_type, vertices, &opts) {
                    Ok(r) => {
                        let _ = writeln!(err, "nodes: {}, labeled maps: {}", r.stats.nodes, r.stats.labeled_solutions);
                        r.representatives
                    }
                    Err(EnumError::BudgetExhausted(s)) => {
                        let _ = writeln!(err, "budget exhausted after {} nodes", s.nodes);
                        doc["budget_exhausted"] = json!(true);
                        emit(out, &doc)?;
                        return Ok(1);
                    }
                }
            };
            let orientable = reps.iter().filter(|m| orientability(m) == Orientability::Orientable).count();
            doc["classes"] = json!(reps.len());
            doc["orientable"] = json!(orientable);
            doc["non_orientable"] = json!(reps.len() - orientable);
            doc["representatives"] = Value::Array(reps.iter().map(map_summary).collect());
            if let Some(path) = file {
                std::fs::write(&path, render_json(&doc)).map_err(|e| format!("{}: {e}", path.display()))?;
            }
            emit(out, &doc)?;
            Ok(0)
        }
        Cmd::Sweep { max_vertices, chi, budget, jobs } => {
            let opts = EnumOptions { budget, jobs, ..EnumOptions::default() };
            let cells = sweep(max_vertices, chi, &opts);
            let mut total = 0;
            let mut complete = true;
            let rows: Vec<Value> = cells
                .iter()
                .map(|c| match &c.outcome {
                    CellOutcome::Count(n) => {
                        total += n;
                        json!({"classes": n, "type": c.face_type.to_string(), "vertices": c.n_vertices})
                    }
                    CellOutcome::BudgetExhausted(_) => {
                        complete = false;
                        json!({"budget_exhausted": true, "classes": null, "type": c.face_type.to_string(), "vertices": c.n_vertices})
                    }
                })
                .collect();
            emit(out, &json!({"cells": rows, "chi": chi, "max_vertices": max_vertices, "total": total}))?;
            Ok(if complete { 0 } else { 1 })
        }
        Cmd::Invariants { file, gi, charpoly, fingerprint } => {
            let mf = load(&file)?;
            let m = &mf.map;
            let t = face_sequence_at(m, 0).map_err(|e| e.to_string())?;
            let mut doc = json!({
                "chi": euler_characteristic(m),
                "edges": m.n_edges(),
                "faces": m.faces.len(),
                "orientable": orientability(m) == Orientability::Orientable,
                "type": t.to_string(),
                "vertices": m.n_vertices,
            });
            if let Some(name) = &mf.name {
                doc["name"] = json!(name);
            }
            for i in gi {
                let g = common_neighbor_graph(m, i);
                doc[format!("G_{i}")] = json!(g.edges.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>());
            }
            if charpoly {
                doc["char_poly"] = json!(char_poly(&edge_graph(m)).to_string());
            }
            if fingerprint {
                doc["fingerprint"] = invariant_fingerprint(m).to_json();
            }
            emit(out, &doc)?;
            Ok(0)
        }
        Cmd::Isomorphic { a, b } => {
            let (ma, mb) = (load(&a)?, load(&b)?);
            match are_isomorphic(&ma.map, &mb.map) {
                Some(w) => {
                    writeln!(out, "isomorphic {w}").map_err(|e| e.to_string())?;
                    Ok(0)
                }
                None => {
                    writeln!(out, "not isomorphic").map_err(|e| e.to_string())?;
                    Ok(1)
                }
            }
        }
        Cmd::Aut { file } => {
            let mf = load(&file)?;
            let m = &mf.map;
            let g = automorphism_group(m);
            let group = match identify_group_capped(&g, IDENTIFY_CAP) {
                Ok(id) => id.to_string(),
                Err(e) => e.to_string(),
            };
            let v_orbits: Vec<Value> = vertex_orbits(&g).into_iter().map(|o| json!(o.members)).collect();
            let f_orbits: Vec<Value> = face_orbits(&g, m)
                .map_err(|e| e.to_string())?
                .into_iter()
                .map(|o| json!({"representative": o.representative, "size": o.size}))
                .collect();
            let doc = json!({
                "face_orbits": f_orbits,
                "generators": g.generators().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "group": group,
                "isohedral": f_orbits.len(),
                "order": g.order().to_string().parse::<u64>().map(Value::from).unwrap_or_else(|_| json!(g.order().to_string())),
                "vertex_orbits": v_orbits,
                "vertex_transitive": v_orbits.len() == 1,
            });
            emit(out, &doc)?;
            Ok(0)
        }
        Cmd::Orientable { file } => {
            let mf = load(&file)?;
            let o = orientability(&mf.map) == Orientability::Orientable;
            writeln!(out, "{}", if o { "orientable" } else { "non-orientable" }).map_err(|e| e.to_string())?;
            Ok(if o { 0 } else { 1 })
        }
        Cmd::VerifyCatalog => {
            let report = verify_catalog();
            writeln!(out, "{report}").map_err(|e| e.to_string())?;
            Ok(if report.structural_ok() { 0 } else { 1 })
        }
        Cmd::Catalog { name } => match name {
            None => {
                for e in catalog() {
                    writeln!(out, "{}\t{}", e.name, e.face_type).map_err(|e| e.to_string())?;
                }
                Ok(0)
            }
            Some(n) => {
                let text = entry_json(&n).ok_or_else(|| format!("no catalog entry named {n:?}"))?;
                out.write_all(text.as_bytes()).map_err(|e| e.to_string())?;
                Ok(0)
            }
        },
        Cmd::ExportDot { file, graph } => {
            let mf = load(&file)?;
            out.write_all(export_dot(&mf.map, graph).as_bytes()).map_err(|e| e.to_string())?;
            Ok(0)
        }
    }
}
