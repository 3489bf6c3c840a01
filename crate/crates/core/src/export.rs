//! Deterministic DOT and JSON serializations of region graphs.
//!
//! JSON layout:
//!
//! ```json
//! {"kind": "bridge", "genus": 3, "id": "0", "members": ["C+", ...],
//!  "pitch_union": [0, 3, ...], "set_class": "6-20",
//!  "edges": [{"a": "C+", "b": "C-", "transform": "P", "relation": [1, 0]}, ...]}
//! ```

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::chord::{Chord, Genus};
use crate::error::{Error, Result};
use crate::pcset::PitchClass;
use crate::region::{Region, RegionKind};
use crate::spelling::Accidentals;
use crate::transform::Transformation;
use crate::voiceleading::VoiceLeading;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    Dot,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(Format::Dot),
            "json" => Ok(Format::Json),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDocument {
    pub a: String,
    pub b: String,
    pub transform: String,
    pub relation: VoiceLeading,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionDocument {
    pub kind: RegionKind,
    pub genus: Genus,
    pub id: String,
    pub members: Vec<String>,
    pub pitch_union: Vec<u8>,
    pub set_class: String,
    pub edges: Vec<EdgeDocument>,
}

impl RegionDocument {
    pub fn from_region(region: &Region, style: Accidentals) -> Self {
        let text = |c: &Chord| c.to_text(style);
        RegionDocument {
            kind: region.kind,
            genus: region.genus,
            id: region.id.to_string(),
            members: region.members.iter().map(text).collect(),
            pitch_union: region.pitch_union.to_vec(),
            set_class: region.set_class().display_name(),
            edges: region
                .edges
                .iter()
                .map(|e| EdgeDocument {
                    a: text(&e.a),
                    b: text(&e.b),
                    transform: e.transform.token.to_string(),
                    relation: e.relation,
                })
                .collect(),
        }
    }

    /// Rebuilds the region named by `kind`, `genus` and `id`, and checks that
    /// the document describes exactly that region.
    pub fn to_region(&self) -> Result<Region> {
        let id: u8 = self
            .id
            .parse()
            .map_err(|_| Error::Parse(format!("bad region id {:?}", self.id)))?;
        let id = PitchClass::try_from(id)?;
        let region = match self.kind {
            RegionKind::Arthropod => {
                Region::arthropod(crate::symmetry::cell_containing(self.genus, id))?
            }
            RegionKind::Bridge => Region::bridge(self.genus, id),
        };
        if region.id != id {
            return Err(Error::Parse(format!("{} is not a canonical region id", self.id)));
        }
        let genus = self.genus;
        let parse = |t: &str| Chord::parse(t, genus);
        let members = self.members.iter().map(|t| parse(t)).collect::<Result<Vec<_>>>()?;
        let edges_match = self.edges.len() == region.edges.len()
            && self.edges.iter().zip(&region.edges).all(|(d, e)| {
                parse(&d.a).ok() == Some(e.a)
                    && parse(&d.b).ok() == Some(e.b)
                    && Transformation::parse(&d.transform, genus).ok() == Some(e.transform)
                    && d.relation == e.relation
            });
        if members != region.members || !edges_match || self.pitch_union != region.pitch_union.to_vec() {
            return Err(Error::Parse(format!(
                "document does not match {} region {} for n={}",
                self.kind,
                self.id,
                genus.n()
            )));
        }
        Ok(region)
    }
}

pub fn export_graph(region: &Region, format: Format) -> String {
    export_graph_with(region, format, Accidentals::Sharps)
}

pub fn export_graph_with(region: &Region, format: Format, style: Accidentals) -> String {
    match format {
        Format::Dot => to_dot(region, style),
        Format::Json => {
            let doc = RegionDocument::from_region(region, style);
            serde_json::to_string_pretty(&doc).expect("region documents always serialize")
        }
    }
}

/// Convenience for text-named formats; unknown names are an error.
pub fn export_graph_named(region: &Region, format: &str) -> Result<String> {
    Ok(export_graph(region, format.parse()?))
}

fn to_dot(region: &Region, style: Accidentals) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "graph \"{}_n{}_{}\" {{",
        region.kind,
        region.genus.n(),
        region.id
    );
    for c in &region.members {
        let name = c.to_text(style);
        let _ = writeln!(out, "  \"{name}\" [label=\"{name}\"];");
    }
    for e in &region.edges {
        let _ = writeln!(
            out,
            "  \"{}\" -- \"{}\" [label=\"{} {}\"];",
            e.a.to_text(style),
            e.b.to_text(style),
            e.transform.token,
            e.relation
        );
    }
    out.push_str("}\n");
    out
}
