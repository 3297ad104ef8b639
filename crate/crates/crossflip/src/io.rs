//! Text formats: facet lists, colorings, edge lists, and flip logs.
//!
//! Facet files hold one facet per line as `[v1,v2,...,vk]`. Lines
//! starting with `#` are comments, except `# map NAME = INT` lines,
//! which let files keep symbolic vertex names: every occurrence of
//! `NAME` parses as `INT`. Symbolic labels without a map entry are an
//! error rather than being silently skipped.

use std::collections::BTreeMap;

use crate::balance::Coloring;
use crate::complex::{Complex, Face, Vertex};
use crate::error::{Error, Result};
use crate::search::FlipEvent;

fn parse_label(
    token: &str,
    line_no: usize,
    names: &BTreeMap<String, Vertex>,
) -> Result<Vertex> {
    let token = token.trim();
    if let Ok(v) = token.parse::<Vertex>() {
        return Ok(v);
    }
    if let Some(&v) = names.get(token) {
        return Ok(v);
    }
    if token.is_empty() {
        return Err(Error::Parse { line: line_no, msg: "empty vertex label".into() });
    }
    Err(Error::NeedsNameMap { line: line_no, label: token.to_string() })
}

/// Parses a comment line of the form `# map NAME = INT`, if it is one.
fn parse_map_line(line: &str, line_no: usize) -> Result<Option<(String, Vertex)>> {
    let Some(rest) = line.trim_start().strip_prefix('#') else {
        return Ok(None);
    };
    let Some(rest) = rest.trim_start().strip_prefix("map ") else {
        return Ok(None);
    };
    let Some((name, value)) = rest.split_once('=') else {
        return Err(Error::Parse { line: line_no, msg: "map line needs NAME = INT".into() });
    };
    let value: Vertex = value.trim().parse().map_err(|_| Error::Parse {
        line: line_no,
        msg: format!("bad integer {:?} in map line", value.trim()),
    })?;
    Ok(Some((name.trim().to_string(), value)))
}

/// Reads a list of faces in the facet-file format, preserving line
/// order. Used directly for shelling-order files, where order matters.
pub fn read_face_list(text: &str) -> Result<Vec<Face>> {
    let mut names: BTreeMap<String, Vertex> = BTreeMap::new();
    let mut faces = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('#') {
            if let Some((name, v)) = parse_map_line(line, line_no)? {
                names.insert(name, v);
            }
            continue;
        }
        let inner = line
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::Parse {
                line: line_no,
                msg: "expected [v1,v2,...]".into(),
            })?;
        let mut facet: Face = Vec::new();
        for token in inner.split(',') {
            facet.push(parse_label(token, line_no, &names)?);
        }
        let mut sorted = facet.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != facet.len() {
            return Err(Error::Parse {
                line: line_no,
                msg: "repeated vertex in facet".into(),
            });
        }
        faces.push(sorted);
    }
    Ok(faces)
}

/// Loads a complex from facet-file text. Redundant faces are absorbed;
/// a file with no facet lines is rejected.
pub fn read_facets(text: &str) -> Result<Complex> {
    let faces = read_face_list(text)?;
    if faces.is_empty() {
        return Err(Error::VoidComplex);
    }
    Complex::from_facets(faces)
}

/// Renders a complex in the facet-file format, one facet per line in
/// canonical order.
pub fn write_facets(complex: &Complex) -> String {
    let mut out = String::new();
    for facet in complex.facets() {
        let labels: Vec<String> = facet.iter().map(|v| v.to_string()).collect();
        out.push('[');
        out.push_str(&labels.join(","));
        out.push_str("]\n");
    }
    out
}

/// Loads a protected-edge list: same format as facet files, every line
/// a pair.
pub fn read_edges(text: &str) -> Result<Vec<Face>> {
    let faces = read_face_list(text)?;
    for (i, f) in faces.iter().enumerate() {
        if f.len() != 2 {
            return Err(Error::Parse {
                line: i + 1,
                msg: format!("edge file entry has {} vertices, want 2", f.len()),
            });
        }
    }
    Ok(faces)
}

/// Loads a coloring from `vertex:color` lines.
pub fn read_coloring(text: &str) -> Result<Coloring> {
    let mut assignment: BTreeMap<Vertex, usize> = BTreeMap::new();
    let mut n_colors = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((v, c)) = line.split_once(':') else {
            return Err(Error::Parse { line: line_no, msg: "expected vertex:color".into() });
        };
        let v: Vertex = v.trim().parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("bad vertex {:?}", v.trim()),
        })?;
        let c: usize = c.trim().parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("bad color {:?}", c.trim()),
        })?;
        if assignment.insert(v, c).is_some() {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("vertex {v} colored twice"),
            });
        }
        n_colors = n_colors.max(c + 1);
    }
    Ok(Coloring::new(assignment, n_colors))
}

/// Renders a coloring as `vertex:color` lines.
pub fn write_coloring(coloring: &Coloring) -> String {
    let mut out = String::new();
    for (v, c) in coloring.iter() {
        out.push_str(&format!("{v}:{c}\n"));
    }
    out
}

/// Renders a reduction history as one line per applied flip.
pub fn write_flip_log(history: &[FlipEvent]) -> String {
    let mut out = String::new();
    for event in history {
        out.push_str(&format!(
            "step={} template={} kind={:?} removed={} added={}\n",
            event.step,
            event.template,
            event.kind,
            faces_inline(&event.removed_facets),
            faces_inline(&event.added_facets),
        ));
    }
    out
}

fn faces_inline(faces: &[Face]) -> String {
    let parts: Vec<String> = faces
        .iter()
        .map(|f| {
            let labels: Vec<String> = f.iter().map(|v| v.to_string()).collect();
            format!("[{}]", labels.join(","))
        })
        .collect();
    parts.join("")
}
