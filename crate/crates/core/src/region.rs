//! Arthropod regions (waterbug, spider, centipede) and bridge regions
//! (hexatonic, octatonic, dodecatonic) as labeled bipartite graphs.
//!
//! An arthropod region collects the 2n displacements of one symmetric cell.
//! A bridge region collects both modalities over one symmetric cell of roots.
//! Edges always join a `+` chord to a `-` chord and carry the catalog
//! transformation that connects them together with its `P_{m,n}` relation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::chord::{arthropod_collection, parent_symmetric_cell, root_cell, Chord, Genus, Modality};
use crate::error::{Error, Result};
use crate::pcset::{prime_form, PcSet, PitchClass, SetClassLabel};
use crate::symmetry::{cell_containing, partition_of};
use crate::transform::{apply, catalog, Kind, Transformation};
use crate::voiceleading::{vl_relation, VoiceLeading};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RegionKind {
    Arthropod,
    Bridge,
}

impl RegionKind {
    pub const fn as_str(self) -> &'static str {
        match self {
            RegionKind::Arthropod => "arthropod",
            RegionKind::Bridge => "bridge",
        }
    }

    /// Whether transformations of `kind` act inside regions of this kind.
    pub const fn hosts(self, kind: Kind) -> bool {
        match self {
            RegionKind::Arthropod => kind.in_arthropod(),
            RegionKind::Bridge => matches!(kind, Kind::BridgeSlide),
        }
    }
}

impl FromStr for RegionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "arthropod" => Ok(RegionKind::Arthropod),
            "bridge" => Ok(RegionKind::Bridge),
            other => Err(Error::Parse(format!("unknown region kind {other:?}"))),
        }
    }
}

impl fmt::Display for RegionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    /// Always the `+` end.
    pub a: Chord,
    pub b: Chord,
    pub transform: &'static Transformation,
    pub relation: VoiceLeading,
}

/// Compass names for the four hexatonic regions, indexed by region id.
/// Only the Northern anchor (the region holding C+) is conventional.
pub const HEXATONIC_ALIASES: [&str; 4] = ["Northern", "Eastern", "Southern", "Western"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub kind: RegionKind,
    pub genus: Genus,
    /// Smallest pitch class of the defining cell.
    pub id: PitchClass,
    /// The symmetric cell: displaced notes for arthropods, roots for bridges.
    pub cell: PcSet,
    /// Sorted by root, then modality.
    pub members: Vec<Chord>,
    /// Sorted by `(a, b)`.
    pub edges: Vec<Edge>,
    pub pitch_union: PcSet,
}

impl Region {
    fn build(kind: RegionKind, genus: Genus, cell: PcSet) -> Region {
        let mut members = match kind {
            RegionKind::Arthropod => arthropod_collection(cell)
                .expect("partition cells are symmetric"),
            RegionKind::Bridge => cell
                .iter()
                .flat_map(|root| [Modality::Plus, Modality::Minus].map(|m| Chord::new(genus, root, m)))
                .collect(),
        };
        members.sort();

        let mut edges = Vec::new();
        for a in members.iter().filter(|c| c.modality == Modality::Plus) {
            for t in catalog(genus).iter().filter(|t| kind.hosts(t.kind)) {
                let b = apply(t, a).expect("catalog transformations are total on their genus");
                let relation = vl_relation(a, &b)
                    .expect("same genus")
                    .expect("region partners are within whole-tone motion");
                edges.push(Edge {
                    a: *a,
                    b,
                    transform: t,
                    relation,
                });
            }
        }
        edges.sort_by_key(|e| (e.a, e.b));

        let pitch_union = members
            .iter()
            .fold(PcSet::EMPTY, |acc, c| acc.union(c.pitch_classes()));
        Region {
            kind,
            genus,
            id: cell.min().expect("cells are non-empty"),
            cell,
            members,
            edges,
            pitch_union,
        }
    }

    pub fn arthropod(cell: PcSet) -> Result<Region> {
        let genus = crate::symmetry::genus_of_cell(cell).ok_or(Error::NotSymmetric(cell))?;
        Ok(Region::build(RegionKind::Arthropod, genus, cell))
    }

    /// The bridge region whose roots are the symmetric cell containing `root`.
    pub fn bridge(genus: Genus, root: PitchClass) -> Region {
        Region::build(RegionKind::Bridge, genus, cell_containing(genus, root))
    }

    pub fn contains(&self, chord: &Chord) -> bool {
        self.members.binary_search(chord).is_ok()
    }

    pub fn set_class(&self) -> SetClassLabel {
        prime_form(self.pitch_union).expect("regions are non-empty")
    }

    pub fn neighbors(&self, chord: &Chord) -> Vec<Chord> {
        let mut out: Vec<Chord> = self
            .edges
            .iter()
            .filter_map(|e| {
                if e.a == *chord {
                    Some(e.b)
                } else if e.b == *chord {
                    Some(e.a)
                } else {
                    None
                }
            })
            .collect();
        out.sort();
        out
    }

    pub fn edge_between(&self, x: &Chord, y: &Chord) -> Option<&Edge> {
        self.edges
            .iter()
            .find(|e| (e.a == *x && e.b == *y) || (e.a == *y && e.b == *x))
    }

    /// Compass alias, hexatonic regions only.
    pub fn alias(&self) -> Option<&'static str> {
        (self.kind == RegionKind::Bridge && self.genus == Genus::Triads)
            .then(|| HEXATONIC_ALIASES[self.id.value() as usize])
    }

    pub fn title(&self) -> String {
        let base = match self.kind {
            RegionKind::Arthropod => self.genus.arthropod_name(),
            RegionKind::Bridge => self.genus.bridge_name(),
        };
        match self.alias() {
            Some(alias) => format!("{base} {} ({alias})", self.id),
            None => format!("{base} {}", self.id),
        }
    }
}

/// One region per symmetric cell: 4, 3 or 2 of them.
pub fn arthropod_regions(genus: Genus) -> Vec<Region> {
    partition_of(genus)
        .cells
        .into_iter()
        .map(|cell| Region::build(RegionKind::Arthropod, genus, cell))
        .collect()
}

pub fn bridge_regions(genus: Genus) -> Vec<Region> {
    partition_of(genus)
        .cells
        .into_iter()
        .map(|cell| Region::build(RegionKind::Bridge, genus, cell))
        .collect()
}

pub fn regions(genus: Genus, kind: RegionKind) -> Vec<Region> {
    match kind {
        RegionKind::Arthropod => arthropod_regions(genus),
        RegionKind::Bridge => bridge_regions(genus),
    }
}

pub fn region_of(chord: &Chord, kind: RegionKind) -> Region {
    let cell = match kind {
        RegionKind::Arthropod => parent_symmetric_cell(chord).cell,
        RegionKind::Bridge => root_cell(chord),
    };
    Region::build(kind, chord.genus, cell)
}

/// The pitch-class-disjoint opposite-modality chord of the bridge region.
pub fn polar(chord: &Chord) -> Chord {
    let pole = catalog(chord.genus)
        .iter()
        .find(|t| t.kind == Kind::Polar)
        .expect("every genus has a polar transformation");
    apply(pole, chord).expect("polar transformation is total")
}

/// A simple closed path, listed without repeating the first chord.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SmoothCycle {
    pub chords: Vec<Chord>,
    pub pitch_union: PcSet,
}

impl SmoothCycle {
    pub fn len(&self) -> usize {
        self.chords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chords.is_empty()
    }

    pub fn is_hamiltonian(&self, region: &Region) -> bool {
        self.len() == region.members.len()
    }

    pub fn set_class(&self) -> SetClassLabel {
        prime_form(self.pitch_union).expect("cycles are non-empty")
    }
}

/// Every simple cycle of a bridge region with length in `min_len..=max_len`.
///
/// Each cycle is listed once: rotated so its smallest chord comes first and
/// oriented so the second chord is smaller than the last. Output is sorted by
/// length, then by chord sequence.
pub fn enumerate_smooth_cycles(
    region: &Region,
    min_len: usize,
    max_len: usize,
) -> Result<Vec<SmoothCycle>> {
    if region.kind != RegionKind::Bridge {
        return Err(Error::CyclesInArthropod);
    }
    let size = region.members.len();
    if min_len < 4 || min_len > max_len || max_len > size {
        return Err(Error::CycleRange {
            min: min_len,
            max: max_len,
            n: region.genus.n(),
        });
    }

    let index = |c: &Chord| region.members.binary_search(c).expect("edge ends are members");
    let mut adj = vec![Vec::new(); size];
    for e in &region.edges {
        let (a, b) = (index(&e.a), index(&e.b));
        adj[a].push(b);
        adj[b].push(a);
    }
    for list in &mut adj {
        list.sort_unstable();
    }

    let mut found = Vec::new();
    let mut path = Vec::with_capacity(max_len);
    let mut on_path = vec![false; size];
    for start in 0..size {
        path.push(start);
        on_path[start] = true;
        extend(&adj, start, min_len, max_len, &mut path, &mut on_path, &mut found);
        on_path[start] = false;
        path.pop();
    }

    let mut cycles: Vec<SmoothCycle> = found
        .into_iter()
        .map(|idx: Vec<usize>| {
            let chords: Vec<Chord> = idx.iter().map(|&i| region.members[i]).collect();
            let pitch_union = chords
                .iter()
                .fold(PcSet::EMPTY, |acc, c| acc.union(c.pitch_classes()));
            SmoothCycle {
                chords,
                pitch_union,
            }
        })
        .collect();
    cycles.sort_by(|x, y| (x.len(), &x.chords).cmp(&(y.len(), &y.chords)));
    Ok(cycles)
}

fn extend(
    adj: &[Vec<usize>],
    start: usize,
    min_len: usize,
    max_len: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    found: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().expect("path starts non-empty");
    for &next in &adj[last] {
        if next == start {
            // close only in canonical orientation
            if path.len() >= min_len && path[1] < last {
                found.push(path.clone());
            }
        } else if next > start && !on_path[next] && path.len() < max_len {
            path.push(next);
            on_path[next] = true;
            extend(adj, start, min_len, max_len, path, on_path, found);
            on_path[next] = false;
            path.pop();
        }
    }
}

/// Arthropod slides paired with the bridge slides whose held and moved parts
/// are swapped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Complementarity {
    pub pairs: Vec<(&'static Transformation, &'static Transformation)>,
    pub unpaired: Vec<&'static Transformation>,
}

pub fn complementarity_pairs(genus: Genus) -> Complementarity {
    let cat = catalog(genus);
    let mut pairs = Vec::new();
    let mut paired_bridge = Vec::new();
    let mut unpaired = Vec::new();
    for t in cat.iter().filter(|t| t.kind == Kind::ArthropodSlide) {
        let swapped = t.slide.map(|s| s.swapped());
        match cat
            .iter()
            .find(|b| b.kind == Kind::BridgeSlide && b.slide == swapped)
        {
            Some(b) => {
                pairs.push((t, b));
                paired_bridge.push(b.token);
            }
            None => unpaired.push(t),
        }
    }
    unpaired.extend(cat.iter().filter(|t| match t.kind {
        Kind::BridgeSlide => !paired_bridge.contains(&t.token),
        Kind::Relative | Kind::Polar => true,
        Kind::ArthropodSlide => false,
    }));
    Complementarity { pairs, unpaired }
}
