//! The named involutions between chords of one genus.
//!
//! Slides are defined by what they hold and what they move: the held part and
//! the moved part are set classes (a single note, an interval class, or one of
//! the whole-tone tetrads W/A/F) that together partition the chord. Applying a
//! slide moves every voice of the moved part one semitone in the same
//! direction; the direction is never a parameter, because only one of the two
//! lands on a genus member of the opposite modality.
//!
//! | n | arthropod                           | bridge                                 |
//! |---|-------------------------------------|----------------------------------------|
//! | 3 | R, S, N                             | P, L, H                                |
//! | 4 | R*, S3(4), S3(2), S6                | S2, S4, S5, O                          |
//! | 6 | R**, SA(3), SA(5), SF, SW(1), SW(3) | S1, S3(A), S3(W), S5(A), S5(F), Z      |

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::chord::{name_of, root_cell, Chord, Genus, Modality};
use crate::error::{Error, Result};
use crate::pcset::{prime_bits, PcSet};
use crate::voiceleading::{vl_relation, VoiceLeading};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    /// One voice by a whole tone, inside the arthropod region.
    Relative,
    /// Two voices by a semitone in parallel, inside the arthropod region.
    ArthropodSlide,
    /// n - 2 voices by a semitone in parallel, inside the bridge region.
    BridgeSlide,
    /// The pitch-class-disjoint partner inside the bridge region.
    Polar,
}

impl Kind {
    pub const fn in_arthropod(self) -> bool {
        matches!(self, Kind::Relative | Kind::ArthropodSlide)
    }
}

/// Whole-tone tetrads held or moved by the hexachord slides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tetrad {
    /// `[0,2,4,6]`, 4-21.
    W,
    /// `[0,2,4,8]`, 4-24.
    A,
    /// `[0,2,6,8]`, 4-25.
    F,
}

impl Tetrad {
    pub const fn prime(self) -> PcSet {
        match self {
            Tetrad::W => PcSet::from_bits(0b0000_0101_0101),
            Tetrad::A => PcSet::from_bits(0b0001_0001_0101),
            Tetrad::F => PcSet::from_bits(0b0001_0100_0101),
        }
    }

    pub const fn forte_name(self) -> &'static str {
        match self {
            Tetrad::W => "4-21",
            Tetrad::A => "4-24",
            Tetrad::F => "4-25",
        }
    }
}

/// A set class named by a slide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Part {
    Note,
    Interval(u8),
    Tetrad(Tetrad),
}

impl Part {
    pub const fn prime(self) -> PcSet {
        match self {
            Part::Note => PcSet::from_bits(1),
            Part::Interval(ic) => PcSet::from_bits(1 | (1 << ic)),
            Part::Tetrad(t) => t.prime(),
        }
    }

    pub const fn size(self) -> usize {
        match self {
            Part::Note => 1,
            Part::Interval(_) => 2,
            Part::Tetrad(_) => 4,
        }
    }

    /// Whether `set` belongs to this set class.
    pub fn matches(self, set: PcSet) -> bool {
        prime_bits(set) == Some(self.prime())
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Part::Note => f.write_str("note"),
            Part::Interval(ic) => write!(f, "ic{ic}"),
            Part::Tetrad(t) => write!(f, "{t:?}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SlideSpec {
    pub held: Part,
    pub moved: Part,
}

impl SlideSpec {
    pub const fn swapped(self) -> SlideSpec {
        SlideSpec {
            held: self.moved,
            moved: self.held,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Transformation {
    pub genus: Genus,
    /// Display token, e.g. `S6`.
    pub token: &'static str,
    /// Unabbreviated token, e.g. `S6(5)`.
    pub full_form: &'static str,
    pub kind: Kind,
    pub slide: Option<SlideSpec>,
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token)
    }
}

impl Transformation {
    /// Looks a token up in the catalog of `genus`.
    ///
    /// Accepts display tokens, full forms, and superscript spellings such as
    /// `S^{A(3)}` or `R^{**}`.
    pub fn parse(text: &str, genus: Genus) -> Result<&'static Transformation> {
        let key: String = text
            .chars()
            .filter(|c| !matches!(c, '^' | '{' | '}') && !c.is_whitespace())
            .collect();
        let find = |g: Genus| {
            catalog(g)
                .iter()
                .find(|t| t.token == key || t.full_form == key)
        };
        if let Some(t) = find(genus) {
            return Ok(t);
        }
        if let Some(other) = Genus::ALL.into_iter().filter(|g| *g != genus).find_map(find) {
            return Err(Error::GenusMismatch {
                expected: genus.n(),
                found: other.genus.n(),
            });
        }
        Err(Error::Parse(format!("unknown transformation {text:?}")))
    }

    /// The relation every application of this transformation realizes, or
    /// `None` for the polar kind (which is characterized by disjointness).
    pub fn expected_relation(&self) -> Option<VoiceLeading> {
        match self.kind {
            Kind::Relative => Some(VoiceLeading::new(0, 1)),
            Kind::ArthropodSlide => Some(VoiceLeading::new(2, 0)),
            Kind::BridgeSlide => Some(VoiceLeading::new(self.genus.cardinality() - 2, 0)),
            Kind::Polar => None,
        }
    }
}

const fn relative(genus: Genus, token: &'static str) -> Transformation {
    Transformation {
        genus,
        token,
        full_form: token,
        kind: Kind::Relative,
        slide: None,
    }
}

const fn polar(genus: Genus, token: &'static str) -> Transformation {
    Transformation {
        genus,
        token,
        full_form: token,
        kind: Kind::Polar,
        slide: None,
    }
}

const fn slide(
    genus: Genus,
    kind: Kind,
    token: &'static str,
    full_form: &'static str,
    held: Part,
    moved: Part,
) -> Transformation {
    Transformation {
        genus,
        token,
        full_form,
        kind,
        slide: Some(SlideSpec { held, moved }),
    }
}

use Genus::{MysticWozzeck as G6, Triads as G3, Tristan as G4};
use Kind::{ArthropodSlide as Arth, BridgeSlide as Bridge};
use Part::{Interval as Ic, Note};

const W: Part = Part::Tetrad(Tetrad::W);
const A: Part = Part::Tetrad(Tetrad::A);
const F: Part = Part::Tetrad(Tetrad::F);

static TRIADS: [Transformation; 6] = [
    relative(G3, "R"),
    slide(G3, Arth, "S", "S", Note, Ic(5)),
    slide(G3, Arth, "N", "N", Note, Ic(3)),
    slide(G3, Bridge, "P", "P", Ic(5), Note),
    slide(G3, Bridge, "L", "L", Ic(3), Note),
    polar(G3, "H"),
];

static SEVENTHS: [Transformation; 8] = [
    relative(G4, "R*"),
    slide(G4, Arth, "S3(4)", "S3(4)", Ic(3), Ic(4)),
    slide(G4, Arth, "S3(2)", "S3(2)", Ic(3), Ic(2)),
    slide(G4, Arth, "S6", "S6(5)", Ic(6), Ic(5)),
    slide(G4, Bridge, "S2", "S2(3)", Ic(2), Ic(3)),
    slide(G4, Bridge, "S4", "S4(3)", Ic(4), Ic(3)),
    slide(G4, Bridge, "S5", "S5(6)", Ic(5), Ic(6)),
    polar(G4, "O"),
];

static HEXACHORDS: [Transformation; 12] = [
    relative(G6, "R**"),
    slide(G6, Arth, "SA(3)", "SA(3)", A, Ic(3)),
    slide(G6, Arth, "SA(5)", "SA(5)", A, Ic(5)),
    slide(G6, Arth, "SF", "SF(5)", F, Ic(5)),
    slide(G6, Arth, "SW(1)", "SW(1)", W, Ic(1)),
    slide(G6, Arth, "SW(3)", "SW(3)", W, Ic(3)),
    slide(G6, Bridge, "S1", "S1(W)", Ic(1), W),
    slide(G6, Bridge, "S3(A)", "S3(A)", Ic(3), A),
    slide(G6, Bridge, "S3(W)", "S3(W)", Ic(3), W),
    slide(G6, Bridge, "S5(A)", "S5(A)", Ic(5), A),
    slide(G6, Bridge, "S5(F)", "S5(F)", Ic(5), F),
    polar(G6, "Z"),
];

/// Every transformation of a genus: arthropod kinds first, then bridge kinds.
pub fn catalog(genus: Genus) -> &'static [Transformation] {
    match genus {
        Genus::Triads => &TRIADS,
        Genus::Tristan => &SEVENTHS,
        Genus::MysticWozzeck => &HEXACHORDS,
    }
}

/// One concrete slide: which pitch classes held, which moved, and by how much.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SlideMove {
    pub held: PcSet,
    pub moved: PcSet,
    pub shift: i32,
    pub result: Chord,
}

/// Every way of realizing slide `spec` on `chord` that lands on a genus
/// member of the opposite modality.
pub fn slide_moves(spec: SlideSpec, chord: &Chord) -> Vec<SlideMove> {
    let pcs = chord.pitch_classes();
    let target = chord.modality.opposite();
    let mut out = Vec::new();
    for moved in subsets_of_size(pcs, spec.moved.size()) {
        let held = pcs.difference(moved);
        if !spec.held.matches(held) || !spec.moved.matches(moved) {
            continue;
        }
        for shift in [1, -1] {
            let shifted = moved.transpose(shift);
            if !shifted.is_disjoint(held) {
                continue;
            }
            if let Ok(result) = name_of(held.union(shifted), chord.genus) {
                if result.modality == target {
                    out.push(SlideMove {
                        held,
                        moved,
                        shift,
                        result,
                    });
                }
            }
        }
    }
    out
}

fn subsets_of_size(set: PcSet, k: usize) -> impl Iterator<Item = PcSet> {
    let mask = set.bits();
    (0..=mask)
        .filter(move |s| s & !mask == 0 && s.count_ones() as usize == k)
        .map(PcSet::from_bits)
}

fn relative_candidates(chord: &Chord) -> Vec<Chord> {
    let pcs = chord.pitch_classes();
    let target = chord.modality.opposite();
    let mut out: Vec<Chord> = pcs
        .iter()
        .flat_map(|p| [2, -2].map(|d| (p, p.transpose(d))))
        .filter(|(_, q)| !pcs.contains(*q))
        .filter_map(|(p, q)| name_of(pcs.without(p).with(q), chord.genus).ok())
        .filter(|c| c.modality == target)
        // a pair reachable by two semitone moves as well counts as P2,0
        .filter(|c| vl_relation(chord, c).ok().flatten() == Some(VoiceLeading::new(0, 1)))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Pitch classes of every chord in `chord`'s bridge region.
pub(crate) fn bridge_union(chord: &Chord) -> PcSet {
    root_cell(chord)
        .iter()
        .flat_map(|root| {
            [Modality::Plus, Modality::Minus].map(|m| Chord::new(chord.genus, root, m))
        })
        .fold(PcSet::EMPTY, |acc, c| acc.union(c.pitch_classes()))
}

fn polar_of(chord: &Chord) -> Result<Chord> {
    let rest = bridge_union(chord).difference(chord.pitch_classes());
    let pole = name_of(rest, chord.genus)
        .map_err(|_| Error::InvariantViolation(format!("no pole for {chord}: {rest}")))?;
    if pole.modality == chord.modality {
        return Err(Error::InvariantViolation(format!(
            "pole of {chord} has the same modality"
        )));
    }
    Ok(pole)
}

fn check_genus(t: &Transformation, c: &Chord) -> Result<()> {
    if t.genus == c.genus {
        Ok(())
    } else {
        Err(Error::GenusMismatch {
            expected: c.genus.n(),
            found: t.genus.n(),
        })
    }
}

fn unique(t: &Transformation, c: &Chord, mut found: Vec<Chord>) -> Result<Chord> {
    found.sort();
    found.dedup();
    match found.as_slice() {
        [one] => Ok(*one),
        other => Err(Error::InvariantViolation(format!(
            "{t} on {c} has {} candidate results",
            other.len()
        ))),
    }
}

pub fn apply(t: &Transformation, c: &Chord) -> Result<Chord> {
    check_genus(t, c)?;
    match (t.kind, t.slide) {
        (Kind::Relative, _) => unique(t, c, relative_candidates(c)),
        (Kind::Polar, _) => polar_of(c),
        (_, Some(spec)) => unique(
            t,
            c,
            slide_moves(spec, c).into_iter().map(|m| m.result).collect(),
        ),
        (_, None) => Err(Error::InvariantViolation(format!("{t} has no slide spec"))),
    }
}

/// The unique slide realizing `t` on `c`, for label checks.
pub fn slide_move(t: &Transformation, c: &Chord) -> Result<SlideMove> {
    check_genus(t, c)?;
    let spec = t
        .slide
        .ok_or_else(|| Error::InvariantViolation(format!("{t} is not a slide")))?;
    let moves = slide_moves(spec, c);
    match moves.as_slice() {
        [one] => Ok(*one),
        other => Err(Error::InvariantViolation(format!(
            "{t} on {c} has {} realizations",
            other.len()
        ))),
    }
}

/// The catalog member taking `x` to `y`, if exactly one does.
pub fn transformation_between(x: &Chord, y: &Chord) -> Result<Option<&'static Transformation>> {
    if x.genus != y.genus {
        return Err(Error::GenusMismatch {
            expected: x.genus.n(),
            found: y.genus.n(),
        });
    }
    let mut hits = Vec::new();
    for t in catalog(x.genus) {
        if apply(t, x)? == *y {
            hits.push(t);
        }
    }
    Ok(match hits.as_slice() {
        [one] => Some(*one),
        _ => None,
    })
}

pub fn apply_sequence(c: &Chord, names: &[&Transformation]) -> Result<Chord> {
    names.iter().try_fold(*c, |acc, t| apply(t, &acc))
}

/// Parses a comma-separated token list. An empty string is the empty sequence.
pub fn parse_sequence(text: &str, genus: Genus) -> Result<Vec<&'static Transformation>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|tok| Transformation::parse(tok.trim(), genus))
        .collect()
}
