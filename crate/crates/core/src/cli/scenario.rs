use serde::{Deserialize, Serialize};

use super::CliError;
use crate::exactnum::{parse_rational, DigitStream, ExactReal, GeneratorTable, Rational, SymbolWitness};
use crate::geometry::{
    triangulate, Cell, Geometry, GroupKind, Interval1D, Isometry, Point, Polytope, Rotation,
};
use crate::trace::ScissorsAutomorphism;

pub const SCENARIO_VERSION: u32 = 1;

/// A scissors automorphism as stored on disk: a target, named pieces, and
/// two placements of the pieces into the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scenario {
    pub name: String,
    pub kind: GroupKind,
    pub table: GeneratorTable,
    pub measure: String,
    pub target: Polytope,
    pub pieces: Vec<(String, Polytope)>,
    pub base: Vec<Isometry>,
    pub moves: Vec<Isometry>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
struct ScenarioFile {
    version: u32,
    name: String,
    geometry: String,
    group: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    symbols: Vec<SymbolFile>,
    measure: String,
    target: Vec<CellFile>,
    pieces: Vec<PieceFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    base: Option<Vec<IsometryFile>>,
    #[serde(rename = "move")]
    moves: Vec<IsometryFile>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
struct SymbolFile {
    name: String,
    lo: String,
    hi: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    digits: Option<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
struct PieceFile {
    name: String,
    cells: Vec<CellFile>,
}

/// `["lo", "hi"]` on the line, `[["x", "y"], …]` in the plane.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(untagged)]
enum CellFile {
    Interval([String; 2]),
    Polygon(Vec<[String; 2]>),
}

/// `"t"` on the line, `["x", "y"]` for a planar translation, or a rotation
/// with a translation.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(untagged)]
enum IsometryFile {
    Line(String),
    Plane([String; 2]),
    Rigid { rotation: [String; 2], translation: [String; 2] },
}

fn rational(s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|e| CliError::Parse(format!("{s:?}: {e}")))
}

fn real(s: &str, table: &GeneratorTable) -> Result<ExactReal, CliError> {
    let e = ExactReal::parse(s).map_err(|e| CliError::Parse(format!("{s:?}: {e}")))?;
    table.check_declared(&e).map_err(|e| CliError::Parse(e.to_string()))?;
    Ok(e)
}

fn point(p: &[String; 2]) -> Result<Point, CliError> {
    Ok(Point::new(rational(&p[0])?, rational(&p[1])?))
}

fn cells(geometry: Geometry, files: &[CellFile], table: &GeneratorTable) -> Result<Polytope, CliError> {
    let mut out = Vec::new();
    for c in files {
        match (geometry, c) {
            (Geometry::E1, CellFile::Interval([lo, hi])) => {
                out.push(Cell::Interval(Interval1D::new(real(lo, table)?, real(hi, table)?, table)?));
            }
            (Geometry::E2, CellFile::Polygon(vs)) => {
                let vs = vs.iter().map(point).collect::<Result<Vec<_>, _>>()?;
                out.extend(triangulate(vs)?.into_iter().map(Cell::Convex));
            }
            _ => return Err(CliError::Parse(format!("cell does not match geometry {geometry}"))),
        }
    }
    Ok(Polytope::new(geometry, out, table)?)
}

fn isometry(f: &IsometryFile, kind: GroupKind, table: &GeneratorTable) -> Result<Isometry, CliError> {
    let g = match f {
        IsometryFile::Line(t) => Isometry::translation_1d(real(t, table)?),
        IsometryFile::Plane(v) => Isometry::translation(rational(&v[0])?, rational(&v[1])?),
        IsometryFile::Rigid { rotation, translation } => {
            Isometry::rigid(Rotation::new(rational(&rotation[0])?, rational(&rotation[1])?)?, point(translation)?)
        }
    };
    g.lift_to(kind).map_err(|e| CliError::Parse(e.to_string()))
}

fn cell_file(c: &Cell) -> CellFile {
    match c {
        Cell::Interval(i) => CellFile::Interval([i.lo().to_expr(), i.hi().to_expr()]),
        Cell::Convex(c) => CellFile::Polygon(c.vertices().iter().map(|v| [v.x.to_string(), v.y.to_string()]).collect()),
    }
}

fn isometry_file(g: &Isometry) -> IsometryFile {
    match g {
        Isometry::T1(t) => IsometryFile::Line(t.to_expr()),
        Isometry::T2(v) => IsometryFile::Plane([v.x.to_string(), v.y.to_string()]),
        Isometry::SE2(r, v) => IsometryFile::Rigid {
            rotation: [r.cos().to_string(), r.sin().to_string()],
            translation: [v.x.to_string(), v.y.to_string()],
        },
    }
}

impl Scenario {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        Self::parse_with(text, None)
    }

    /// Parses with an optional cap on sign-decision precision.
    pub fn parse_with(text: &str, precision_bits: Option<u32>) -> Result<Self, CliError> {
        let file: ScenarioFile = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        if file.version != SCENARIO_VERSION {
            return Err(CliError::Parse(format!("unsupported scenario version {}", file.version)));
        }
        let kind: GroupKind = file.group.parse().map_err(|e: crate::geometry::GeometryError| CliError::Parse(e.to_string()))?;
        let geometry = match file.geometry.as_str() {
            "E1" => Geometry::E1,
            "E2" => Geometry::E2,
            g => return Err(CliError::Parse(format!("unknown geometry {g:?}"))),
        };
        if kind.geometry() != geometry {
            return Err(CliError::Parse(format!("group {kind} does not act on {geometry}")));
        }
        let mut table = GeneratorTable::new();
        if let Some(bits) = precision_bits {
            table = table.with_max_precision_bits(bits);
        }
        for s in &file.symbols {
            let digits = s.digits.as_deref().map(DigitStream::parse).transpose().map_err(|e| CliError::Parse(e.to_string()))?;
            let w = SymbolWitness::new(rational(&s.lo)?, rational(&s.hi)?, digits).map_err(|e| CliError::Parse(e.to_string()))?;
            table.declare(s.name.clone(), w).map_err(|e| CliError::Parse(e.to_string()))?;
        }
        let target = cells(geometry, &file.target, &table)?;
        let pieces = file
            .pieces
            .iter()
            .map(|p| Ok((p.name.clone(), cells(geometry, &p.cells, &table)?)))
            .collect::<Result<Vec<_>, CliError>>()?;
        let n = pieces.len();
        let moves = file.moves.iter().map(|g| isometry(g, kind, &table)).collect::<Result<Vec<_>, _>>()?;
        let base = match &file.base {
            Some(b) => b.iter().map(|g| isometry(g, kind, &table)).collect::<Result<Vec<_>, _>>()?,
            None => vec![kind.identity(); n],
        };
        if base.len() != n || moves.len() != n {
            return Err(CliError::Parse(format!("{n} pieces need {n} base and {n} move elements")));
        }
        Ok(Self { name: file.name, kind, table, measure: file.measure, target, pieces, base, moves })
    }

    fn to_file(&self) -> ScenarioFile {
        let symbols = self
            .table
            .symbols()
            .map(|(name, w)| SymbolFile {
                name: name.to_string(),
                lo: w.lo().to_string(),
                hi: w.hi().to_string(),
                digits: w.digits().map(ToString::to_string),
            })
            .collect();
        let identity_base = self.base.iter().all(Isometry::is_identity);
        ScenarioFile {
            version: SCENARIO_VERSION,
            name: self.name.clone(),
            geometry: self.kind.geometry().to_string(),
            group: self.kind.name().to_string(),
            symbols,
            measure: self.measure.clone(),
            target: self.target.cells().iter().map(cell_file).collect(),
            pieces: self
                .pieces
                .iter()
                .map(|(name, p)| PieceFile { name: name.clone(), cells: p.cells().iter().map(cell_file).collect() })
                .collect(),
            base: (!identity_base).then(|| self.base.iter().map(isometry_file).collect()),
            moves: self.moves.iter().map(isometry_file).collect(),
        }
    }

    /// Canonical pretty JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("serializable") + "\n"
    }

    /// The stored form of an automorphism. Pieces are named `P0, P1, …`
    /// unless names are given.
    pub fn from_automorphism(name: &str, measure: &str, s: &ScissorsAutomorphism, names: Option<Vec<String>>) -> Self {
        let pieces: Vec<Polytope> = s.pieces().into_iter().cloned().collect();
        let names = names.unwrap_or_else(|| (0..pieces.len()).map(|i| format!("P{i}")).collect());
        Self {
            name: name.to_string(),
            kind: s.kind(),
            table: s.table().clone(),
            measure: measure.to_string(),
            target: s.target().clone(),
            pieces: names.into_iter().zip(pieces).collect(),
            base: s.base_elements().into_iter().cloned().collect(),
            moves: s.move_elements().into_iter().cloned().collect(),
        }
    }

    pub fn piece_polytopes(&self) -> Vec<Polytope> {
        self.pieces.iter().map(|(_, p)| p.clone()).collect()
    }

    pub fn placements(&self, move_side: bool) -> Vec<(Isometry, Polytope)> {
        let gs = if move_side { &self.moves } else { &self.base };
        gs.iter().cloned().zip(self.piece_polytopes()).collect()
    }

    pub fn automorphism(&self) -> Result<ScissorsAutomorphism, CliError> {
        Ok(ScissorsAutomorphism::new(
            self.kind,
            self.table.clone(),
            self.target.clone(),
            self.piece_polytopes(),
            self.base.clone(),
            self.moves.clone(),
        )?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXCHANGE: &str = r#"{
        "version": 1,
        "name": "exchange",
        "geometry": "E1",
        "group": "T1",
        "symbols": [
            {"name": "x", "lo": "1/4", "hi": "1/3"},
            {"name": "y", "lo": "1/2", "hi": "2/3"}
        ],
        "measure": "length",
        "target": [["0", "x + y"]],
        "pieces": [
            {"name": "A", "cells": [["0", "x"]]},
            {"name": "B", "cells": [["x", "x + y"]]}
        ],
        "move": ["y", "-x"]
    }"#;

    #[test]
    fn round_trip() {
        let s = Scenario::parse(EXCHANGE).unwrap();
        assert_eq!(s.pieces.len(), 2);
        assert!(s.base.iter().all(Isometry::is_identity));
        let text = s.to_json();
        let again = Scenario::parse(&text).unwrap();
        assert_eq!(again, s);
        assert_eq!(again.to_json(), text);
    }

    #[test]
    fn errors_are_typed() {
        assert!(matches!(Scenario::parse("{"), Err(CliError::Parse(_))));
        let wrong_version = EXCHANGE.replace("\"version\": 1", "\"version\": 2");
        assert!(matches!(Scenario::parse(&wrong_version), Err(CliError::Parse(_))));
        let unknown = EXCHANGE.replace("\"-x\"", "\"-z\"");
        assert!(matches!(Scenario::parse(&unknown), Err(CliError::Parse(_))));
        let floats = EXCHANGE.replace("\"1/4\"", "0.25");
        assert!(matches!(Scenario::parse(&floats), Err(CliError::Parse(_))));
    }
}
