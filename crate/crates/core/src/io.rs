//! Map files and deterministic JSON/DOT output.
//!
//! A map file is a JSON object with keys `faces` (arrays of vertex labels),
//! `vertices`, and optionally `name` and `type` (e.g. `"3,4,4,4,4"`).

use std::fmt::Write as _;
use std::path::Path;

use serde_json::Value;

use crate::error::IoError;
use crate::facetype::FaceSequence;
use crate::invariants::{common_neighbor_graph, edge_graph};
use crate::map::{is_sem, validate, PolyhedralMap};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapFile {
    pub name: Option<String>,
    pub face_type: Option<FaceSequence>,
    pub map: PolyhedralMap,
}

impl MapFile {
    pub fn new(map: PolyhedralMap) -> Self {
        MapFile { name: None, face_type: None, map }
    }
}

/// Parses map-file text without validating the map.
pub fn parse_map(text: &str, path: &str) -> Result<MapFile, IoError> {
    let v: Value = serde_json::from_str(text).map_err(|e| IoError::Parse {
        path: path.to_string(),
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })?;
    let field = |f: &str, msg: &str| IoError::Field { path: path.to_string(), field: f.to_string(), msg: msg.to_string() };
    let obj = v.as_object().ok_or_else(|| field("<root>", "expected an object"))?;
    let n = obj
        .get("vertices")
        .ok_or_else(|| field("vertices", "missing"))?
        .as_u64()
        .ok_or_else(|| field("vertices", "expected a non-negative integer"))? as usize;
    let faces_v = obj.get("faces").ok_or_else(|| field("faces", "missing"))?;
    let arr = faces_v.as_array().ok_or_else(|| field("faces", "expected an array of faces"))?;
    let mut faces = Vec::with_capacity(arr.len());
    for (i, f) in arr.iter().enumerate() {
        let labels = f.as_array().ok_or_else(|| field("faces", &format!("face {i} is not an array")))?;
        let mut face = Vec::with_capacity(labels.len());
        for x in labels {
            let x = x.as_u64().ok_or_else(|| field("faces", &format!("face {i} has a non-integer label")))?;
            face.push(x as usize);
        }
        faces.push(face);
    }
    let name = match obj.get("name") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(_) => return Err(field("name", "expected a string")),
    };
    let face_type = match obj.get("type") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.parse::<FaceSequence>().map_err(|e| field("type", &e.to_string()))?),
        Some(_) => return Err(field("type", "expected a string such as \"3,4,4,4,4\"")),
    };
    Ok(MapFile { name, face_type, map: PolyhedralMap::new(n, faces) })
}

/// Parses and validates; a declared type must match every vertex.
pub fn parse_valid_map(text: &str, path: &str) -> Result<MapFile, IoError> {
    let mf = parse_map(text, path)?;
    let report = validate(&mf.map);
    if !report.is_ok() {
        return Err(IoError::Invalid { path: path.to_string(), report: report.to_string() });
    }
    if let Some(t) = &mf.face_type {
        if !is_sem(&mf.map, t) {
            return Err(IoError::Field {
                path: path.to_string(),
                field: "type".to_string(),
                msg: format!("not every vertex has face sequence {t}"),
            });
        }
    }
    Ok(mf)
}

pub fn load_map(path: &Path) -> Result<MapFile, IoError> {
    let p = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| IoError::Read { path: p.clone(), source: e })?;
    parse_valid_map(&text, &p)
}

pub fn save_map(mf: &MapFile, path: &Path) -> Result<(), IoError> {
    std::fs::write(path, map_to_json(mf))
        .map_err(|e| IoError::Read { path: path.display().to_string(), source: e })
}

/// Serializes with sorted keys and one face per line.
pub fn map_to_json(mf: &MapFile) -> String {
    let mut s = String::from("{\n  \"faces\": [\n");
    let n = mf.map.faces.len();
    for (i, f) in mf.map.faces.iter().enumerate() {
        let parts: Vec<String> = f.iter().map(|x| x.to_string()).collect();
        let _ = write!(s, "    [{}]", parts.join(","));
        s.push_str(if i + 1 < n { ",\n" } else { "\n" });
    }
    s.push_str("  ],\n");
    if let Some(name) = &mf.name {
        let _ = writeln!(s, "  \"name\": {},", Value::String(name.clone()));
    }
    if let Some(t) = &mf.face_type {
        let _ = writeln!(s, "  \"type\": \"{t}\",");
    }
    let _ = writeln!(s, "  \"vertices\": {}\n}}", mf.map.n_vertices);
    s
}

/// Which graph of a map to export.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Edge,
    CommonNeighbors(usize),
}

impl std::str::FromStr for GraphKind {
    type Err = String;

    /// `edge`, or `g<i>` for the common-neighbor graph `G_i`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().to_ascii_lowercase();
        if s == "edge" {
            return Ok(GraphKind::Edge);
        }
        s.strip_prefix('g')
            .and_then(|i| i.parse().ok())
            .map(GraphKind::CommonNeighbors)
            .ok_or_else(|| format!("unknown graph {s:?}; use edge or g<i>"))
    }
}

pub fn export_dot(map: &PolyhedralMap, kind: GraphKind) -> String {
    match kind {
        GraphKind::Edge => edge_graph(map).to_dot("edge"),
        GraphKind::CommonNeighbors(i) => common_neighbor_graph(map, i).to_dot(&format!("G_{i}")),
    }
}
