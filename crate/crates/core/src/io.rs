//! Text formats for categories and planar maps.
//!
//! Category files are line oriented, `#` starts a comment:
//!
//! ```text
//! mtc semion
//! labels 1 s
//! unit 1
//! dual s s
//! N s s 1 1
//! S 0 0.7071067811865476 0 0.7071067811865476 0
//! S 1 0.7071067811865476 0 -0.7071067811865476 0
//! F s s s s 1 1 -1 0
//! ```
//!
//! `N` lines omitted are zero, `dual` lines omitted are inferred from `N`,
//! `S` rows hold `re im` pairs, and `F` lines are optional. When some `F`
//! lines are present, admissible entries left out are 1. A file without `S`
//! lines only loads when its name is a built-in.
//!
//! Map files list the counterclockwise dart rotation of each vertex and the
//! two darts of each edge, edges numbered from 1:
//!
//! ```text
//! map theta
//! vertex 0 2 4
//! vertex 1 5 3
//! edge 1 0 1
//! edge 2 2 3
//! edge 3 4 5
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use ndarray::Array2;
use num_complex::Complex64;
use sha2::{Digest, Sha256};

use crate::error::{Error, ParseError, Result};
use crate::graph::PlanarGraph;
use crate::mtc::{builtin, FusionRing, Label, MtcData};
use crate::recoupling::{build_recoupling, RecouplingData};

/// Parsed contents of a category file. Labels are stored in file order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct MtcFile {
    pub name: String,
    pub labels: Vec<String>,
    pub unit: usize,
    /// `dual[x]`, one entry per label.
    pub dual: Vec<usize>,
    /// Nonzero `N_{a,b}^c`.
    pub fusion: BTreeMap<(usize, usize, usize), u32>,
    pub s: Option<Vec<Vec<Complex64>>>,
    pub f: BTreeMap<[usize; 6], Complex64>,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<(usize, &'a str)>,
}

impl Line<'_> {
    fn err(&self, token: usize, message: impl Into<String>) -> ParseError {
        let column = self.tokens.get(token).map_or(1, |t| t.0);
        ParseError::new(self.number, column, message)
    }

    fn end_column(&self) -> usize {
        self.tokens.last().map_or(1, |(c, t)| c + t.chars().count())
    }

    fn arity(&self, n: usize) -> std::result::Result<(), ParseError> {
        if self.tokens.len() != n + 1 {
            let col = if self.tokens.len() > n + 1 { self.tokens[n + 1].0 } else { self.end_column() };
            return Err(ParseError::new(
                self.number,
                col,
                format!("`{}` takes {n} argument(s), found {}", self.tokens[0].1, self.tokens.len() - 1),
            ));
        }
        Ok(())
    }

    fn number<T: std::str::FromStr>(&self, i: usize, what: &str) -> std::result::Result<T, ParseError> {
        self.tokens[i]
            .1
            .parse()
            .map_err(|_| self.err(i, format!("expected {what}, found {:?}", self.tokens[i].1)))
    }
}

fn tokenize(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            let mut tokens = Vec::new();
            let mut start = None;
            for (col, ch) in content.chars().enumerate() {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some(col),
                    (true, Some(s)) => {
                        tokens.push((s, s, col));
                        start = None;
                    }
                    _ => {}
                }
            }
            if let Some(s) = start {
                tokens.push((s, s, content.chars().count()));
            }
            if tokens.is_empty() {
                return None;
            }
            let chars: Vec<(usize, char)> = content.char_indices().collect();
            let byte = |c: usize| chars.get(c).map_or(content.len(), |p| p.0);
            let tokens = tokens
                .into_iter()
                .map(|(col, s, e)| (col + 1, &content[byte(s)..byte(e)]))
                .collect();
            Some(Line { number: i + 1, tokens })
        })
        .collect()
}

/// Parses a category file. Errors carry 1-based line and column.
pub fn parse_mtc(text: &str) -> std::result::Result<MtcFile, ParseError> {
    let lines = tokenize(text);
    let mut name: Option<String> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut unit: Option<usize> = None;
    let mut dual_lines: BTreeMap<usize, usize> = BTreeMap::new();
    let mut fusion = BTreeMap::new();
    let mut s_rows: BTreeMap<usize, Vec<Complex64>> = BTreeMap::new();
    let mut f = BTreeMap::new();

    for line in &lines {
        let keyword = line.tokens[0].1;
        if !matches!(keyword, "mtc" | "labels") && labels.is_none() {
            return Err(line.err(0, format!("`{keyword}` before the `labels` line")));
        }
        let lookup = |i: usize| -> std::result::Result<usize, ParseError> {
            let names = labels.as_ref().expect("labels checked above");
            let tok = line.tokens[i].1;
            names
                .iter()
                .position(|n| n == tok)
                .ok_or_else(|| line.err(i, format!("unknown label {tok:?}")))
        };
        match keyword {
            "mtc" => {
                line.arity(1)?;
                if name.is_some() {
                    return Err(line.err(0, "duplicate `mtc` line"));
                }
                name = Some(line.tokens[1].1.to_string());
            }
            "labels" => {
                if labels.is_some() {
                    return Err(line.err(0, "duplicate `labels` line"));
                }
                if line.tokens.len() < 2 {
                    return Err(ParseError::new(line.number, line.end_column(), "`labels` needs at least one label"));
                }
                let names: Vec<String> = line.tokens[1..].iter().map(|t| t.1.to_string()).collect();
                for (i, n) in names.iter().enumerate() {
                    if names[..i].contains(n) {
                        return Err(line.err(i + 1, format!("duplicate label {n:?}")));
                    }
                }
                labels = Some(names);
            }
            "unit" => {
                line.arity(1)?;
                if unit.is_some() {
                    return Err(line.err(0, "duplicate `unit` line"));
                }
                unit = Some(lookup(1)?);
            }
            "dual" => {
                line.arity(2)?;
                let (a, b) = (lookup(1)?, lookup(2)?);
                for (x, y, tok) in [(a, b, 1), (b, a, 2)] {
                    if let Some(&prev) = dual_lines.get(&x) {
                        if prev != y {
                            return Err(line.err(tok, "conflicting dual entries"));
                        }
                    }
                    dual_lines.insert(x, y);
                }
            }
            "N" => {
                line.arity(4)?;
                let key = (lookup(1)?, lookup(2)?, lookup(3)?);
                let v: u32 = line.number(4, "a nonnegative integer")?;
                if fusion.contains_key(&key) {
                    return Err(line.err(0, "duplicate N entry"));
                }
                if v > 0 {
                    fusion.insert(key, v);
                }
            }
            "S" => {
                let r = labels.as_ref().map_or(0, Vec::len);
                line.arity(1 + 2 * r)?;
                let row = match line.tokens[1].1.parse::<usize>() {
                    Ok(i) if i < r => i,
                    Ok(_) => return Err(line.err(1, format!("row index out of range 0..{r}"))),
                    Err(_) => lookup(1)?,
                };
                let mut values = Vec::with_capacity(r);
                for j in 0..r {
                    let re: f64 = line.number(2 + 2 * j, "a real number")?;
                    let im: f64 = line.number(3 + 2 * j, "a real number")?;
                    values.push(Complex64::new(re, im));
                }
                if s_rows.insert(row, values).is_some() {
                    return Err(line.err(1, "duplicate S row"));
                }
            }
            "F" => {
                line.arity(8)?;
                let mut key = [0usize; 6];
                for (i, k) in key.iter_mut().enumerate() {
                    *k = lookup(i + 1)?;
                }
                let re: f64 = line.number(7, "a real number")?;
                let im: f64 = line.number(8, "a real number")?;
                if f.insert(key, Complex64::new(re, im)).is_some() {
                    return Err(line.err(0, "duplicate F entry"));
                }
            }
            other => return Err(line.err(0, format!("unknown keyword {other:?}"))),
        }
    }

    let last = lines.last().map_or(1, |l| l.number);
    let name = name.ok_or_else(|| ParseError::new(1, 1, "missing `mtc <name>` line"))?;
    let labels = labels.ok_or_else(|| ParseError::new(last, 1, "missing `labels` line"))?;
    let unit = unit.ok_or_else(|| ParseError::new(last, 1, "missing `unit` line"))?;
    let r = labels.len();
    let mut dual = Vec::with_capacity(r);
    for (x, name) in labels.iter().enumerate() {
        let d = match dual_lines.get(&x) {
            Some(&y) => y,
            None => (0..r)
                .find(|&y| fusion.get(&(x, y, unit)).copied().unwrap_or(0) > 0)
                .ok_or_else(|| ParseError::new(last, 1, format!("cannot infer the dual of {name:?}")))?,
        };
        dual.push(d);
    }
    let s = if s_rows.is_empty() {
        None
    } else {
        if let Some(missing) = (0..r).find(|i| !s_rows.contains_key(i)) {
            return Err(ParseError::new(last, 1, format!("missing S row {missing}")));
        }
        Some(s_rows.into_values().collect())
    };
    Ok(MtcFile { name, labels, unit, dual, fusion, s, f })
}

fn fmt_f64(x: f64) -> String {
    // Debug formatting round-trips exactly.
    format!("{x:?}")
}

/// Canonical text form; `parse_mtc(serialize_mtc(f)) == f`.
pub fn serialize_mtc(file: &MtcFile) -> String {
    let name = |i: usize| file.labels[i].as_str();
    let mut out = String::new();
    out.push_str(&format!("mtc {}\n", file.name));
    out.push_str(&format!("labels {}\n", file.labels.join(" ")));
    out.push_str(&format!("unit {}\n", name(file.unit)));
    for (x, &y) in file.dual.iter().enumerate() {
        if x <= y {
            out.push_str(&format!("dual {} {}\n", name(x), name(y)));
        }
    }
    for (&(a, b, c), v) in &file.fusion {
        out.push_str(&format!("N {} {} {} {v}\n", name(a), name(b), name(c)));
    }
    if let Some(s) = &file.s {
        for (i, row) in s.iter().enumerate() {
            let cells: Vec<String> = row
                .iter()
                .map(|z| format!("{} {}", fmt_f64(z.re), fmt_f64(z.im)))
                .collect();
            out.push_str(&format!("S {i} {}\n", cells.join(" ")));
        }
    }
    for (k, v) in &file.f {
        let labels: Vec<&str> = k.iter().map(|&i| name(i)).collect();
        out.push_str(&format!("F {} {} {}\n", labels.join(" "), fmt_f64(v.re), fmt_f64(v.im)));
    }
    out
}

/// Hex SHA-256 of the canonical serialization.
pub fn fingerprint(file: &MtcFile) -> String {
    hex::encode(Sha256::digest(serialize_mtc(file).as_bytes()))
}

impl MtcFile {
    /// Snapshot of a category, with its F-symbols when given.
    pub fn from_mtc(m: &MtcData, rd: Option<&RecouplingData>) -> Self {
        let r = m.rank();
        let mut fusion = BTreeMap::new();
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    let v = m.n(a, b, c);
                    if v > 0 {
                        fusion.insert((a, b, c), v);
                    }
                }
            }
        }
        let s = (0..r).map(|i| (0..r).map(|j| m.s_entry(i, j)).collect()).collect();
        let f = rd.map_or_else(BTreeMap::new, |rd| rd.entries().into_iter().collect());
        Self {
            name: m.name().to_string(),
            labels: m.ring().names().to_vec(),
            unit: 0,
            dual: m.ring().dual_map().to_vec(),
            fusion,
            s: Some(s),
            f,
        }
    }

    /// Label order with the unit moved to the front.
    fn order(&self) -> Vec<usize> {
        std::iter::once(self.unit)
            .chain((0..self.labels.len()).filter(|&x| x != self.unit))
            .collect()
    }

    /// Builds the category. Labels are reordered so that the unit comes first.
    pub fn to_mtc(&self) -> Result<MtcData> {
        let order = self.order();
        let r = order.len();
        let mut pos = vec![0; r];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let names = order.iter().map(|&i| self.labels[i].clone()).collect();
        let dual = order.iter().map(|&i| pos[self.dual[i]]).collect();
        let ring = FusionRing::from_fn(names, dual, |x, y, z| {
            self.fusion.get(&(order[x], order[y], order[z])).copied().unwrap_or(0)
        })?;
        let Some(rows) = &self.s else {
            let m = builtin(&self.name).map_err(|_| {
                Error::Unsupported(format!(
                    "{:?} has no S matrix and is not a built-in category",
                    self.name
                ))
            })?;
            if m.ring().names() != ring.names() || m.ring() != &ring {
                return Err(Error::CategoryMismatch {
                    left: self.name.clone(),
                    right: format!("built-in {}", m.name()),
                });
            }
            return Ok(m);
        };
        for row in rows {
            if row.len() != r {
                return Err(Error::ShapeMismatch { what: "S row", expected: r, found: row.len() });
            }
        }
        let s = Array2::from_shape_fn((r, r), |(i, j)| rows[order[i]][order[j]]);
        MtcData::new(self.name.clone(), ring, s)
    }

    /// F-symbols from the file (missing admissible entries are 1), or the
    /// built-in table when the file has none. Not validated.
    pub fn recoupling(&self, m: &MtcData) -> Result<RecouplingData> {
        if self.f.is_empty() {
            return build_recoupling(m);
        }
        let order = self.order();
        let mut pos = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let entries = self.f.iter().map(|(k, &v)| (k.map(|i| pos[i]), v));
        RecouplingData::from_table(m, entries, true)
    }
}

/// A loaded category: either a file on disk or a built-in name.
#[derive(Debug, Clone)]
pub struct LoadedCategory {
    pub mtc: MtcData,
    pub file: MtcFile,
}

impl LoadedCategory {
    pub fn fingerprint(&self) -> String {
        fingerprint(&self.file)
    }

    pub fn recoupling(&self) -> Result<RecouplingData> {
        self.file.recoupling(&self.mtc)
    }
}

/// Resolves `spec` as a path if it names an existing file, otherwise as a built-in.
pub fn load_category(spec: &str) -> Result<LoadedCategory> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path)?;
        let file = parse_mtc(&text)?;
        let mtc = file.to_mtc()?;
        return Ok(LoadedCategory { mtc, file });
    }
    let mtc = builtin(spec)?;
    let rd = build_recoupling(&mtc).ok();
    let file = MtcFile::from_mtc(&mtc, rd.as_ref());
    Ok(LoadedCategory { mtc, file })
}

/// Parses a map file.
pub fn parse_map(text: &str) -> Result<PlanarGraph> {
    let mut name = None;
    let mut vertices = Vec::new();
    let mut edges: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for line in tokenize(text) {
        match line.tokens[0].1 {
            "map" => {
                line.arity(1)?;
                name = Some(line.tokens[1].1.to_string());
            }
            "vertex" => {
                let darts = (1..line.tokens.len())
                    .map(|i| line.number::<usize>(i, "a dart index"))
                    .collect::<std::result::Result<Vec<_>, _>>()?;
                vertices.push(darts);
            }
            "edge" => {
                line.arity(3)?;
                let k: usize = line.number(1, "an edge number")?;
                if k == 0 {
                    return Err(line.err(1, "edges are numbered from 1").into());
                }
                let ends = (line.number(2, "a dart index")?, line.number(3, "a dart index")?);
                if edges.insert(k - 1, ends).is_some() {
                    return Err(line.err(1, format!("duplicate edge {k}")).into());
                }
            }
            other => return Err(line.err(0, format!("unknown keyword {other:?}")).into()),
        }
    }
    if let Some(missing) = (0..edges.len()).find(|k| !edges.contains_key(k)) {
        return Err(Error::InvalidMap(format!("edge {} is missing", missing + 1)));
    }
    PlanarGraph::from_rotation(
        name.unwrap_or_else(|| "map".into()),
        vertices,
        edges.into_values().collect(),
    )
}

pub fn serialize_map(g: &PlanarGraph) -> String {
    let mut out = format!("map {}\n", g.name().replace(char::is_whitespace, "_"));
    for v in g.vertices() {
        let darts: Vec<String> = v.iter().map(usize::to_string).collect();
        out.push_str(&format!("vertex {}\n", darts.join(" ")));
    }
    for (k, &(t, h)) in g.edges().iter().enumerate() {
        out.push_str(&format!("edge {} {t} {h}\n", k + 1));
    }
    out
}

/// Labels given by name or by index.
pub fn parse_labels(m: &MtcData, tokens: &[String]) -> Result<Vec<Label>> {
    tokens
        .iter()
        .map(|t| match m.label(t) {
            Ok(x) => Ok(x),
            Err(e) => match t.parse::<usize>() {
                Ok(i) if i < m.rank() => Ok(Label(i)),
                _ => Err(e),
            },
        })
        .collect()
}
