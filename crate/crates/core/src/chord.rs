//! Nearly symmetric chords: one single-semitone displacement away from a
//! cell of a symmetric partition.
//!
//! A chord is identified by `(genus, root, modality)`; its pitch classes are
//! always derived from the genus templates. Downward displacement gives the
//! `+` modality, upward the `-` modality.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pcset::{PcSet, PitchClass};
use crate::spelling::{parse_pitch_class, pc_name, Accidentals};
use crate::symmetry::{self, genus_of_cell};

/// One species column: chords of cardinality 3, 4 or 6.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum Genus {
    /// Major and minor triads.
    Triads,
    /// Dominant and half-diminished sevenths.
    Tristan,
    /// Wozzeck and mystic hexachords.
    MysticWozzeck,
}

impl Genus {
    pub const ALL: [Genus; 3] = [Genus::Triads, Genus::Tristan, Genus::MysticWozzeck];

    pub fn from_cardinality(n: i64) -> Result<Genus> {
        match n {
            3 => Ok(Genus::Triads),
            4 => Ok(Genus::Tristan),
            6 => Ok(Genus::MysticWozzeck),
            other => Err(Error::UnsupportedGenus(other)),
        }
    }

    pub const fn cardinality(self) -> usize {
        match self {
            Genus::Triads => 3,
            Genus::Tristan => 4,
            Genus::MysticWozzeck => 6,
        }
    }

    pub const fn n(self) -> u8 {
        self.cardinality() as u8
    }

    /// Spacing of the symmetric cells, 12/n.
    pub const fn step(self) -> i32 {
        12 / self.cardinality() as i32
    }

    pub const fn name(self) -> &'static str {
        match self {
            Genus::Triads => "consonant triads",
            Genus::Tristan => "Tristan genus",
            Genus::MysticWozzeck => "mystic-Wozzeck genus",
        }
    }

    pub const fn symmetric_name(self) -> &'static str {
        match self {
            Genus::Triads => "augmented triad",
            Genus::Tristan => "fully-diminished seventh",
            Genus::MysticWozzeck => "whole-tone scale",
        }
    }

    pub const fn plus_name(self) -> &'static str {
        match self {
            Genus::Triads => "major triad",
            Genus::Tristan => "dominant seventh",
            Genus::MysticWozzeck => "Wozzeck chord",
        }
    }

    pub const fn minus_name(self) -> &'static str {
        match self {
            Genus::Triads => "minor triad",
            Genus::Tristan => "half-diminished seventh",
            Genus::MysticWozzeck => "mystic chord",
        }
    }

    pub const fn arthropod_name(self) -> &'static str {
        match self {
            Genus::Triads => "Weitzmann waterbug",
            Genus::Tristan => "Boretz spider",
            Genus::MysticWozzeck => "centipede",
        }
    }

    pub const fn bridge_name(self) -> &'static str {
        match self {
            Genus::Triads => "hexatonic region",
            Genus::Tristan => "octatonic region",
            Genus::MysticWozzeck => "dodecatonic region",
        }
    }

    /// Intervals above the root.
    pub const fn template(self, modality: Modality) -> &'static [i32] {
        match (self, modality) {
            (Genus::Triads, Modality::Plus) => &[0, 4, 7],
            (Genus::Triads, Modality::Minus) => &[0, 3, 7],
            (Genus::Tristan, Modality::Plus) => &[0, 4, 7, 10],
            (Genus::Tristan, Modality::Minus) => &[0, 3, 6, 10],
            (Genus::MysticWozzeck, Modality::Plus) => &[0, 1, 4, 6, 8, 10],
            (Genus::MysticWozzeck, Modality::Minus) => &[0, 1, 3, 5, 7, 9],
        }
    }

    /// All 24 chords, ordered by root then modality.
    pub fn chords(self) -> Vec<Chord> {
        PitchClass::all()
            .flat_map(|root| {
                [Modality::Plus, Modality::Minus].map(|modality| Chord::new(self, root, modality))
            })
            .collect()
    }
}

impl From<Genus> for u8 {
    fn from(g: Genus) -> u8 {
        g.n()
    }
}

impl TryFrom<u8> for Genus {
    type Error = Error;

    fn try_from(n: u8) -> Result<Genus> {
        Genus::from_cardinality(n as i64)
    }
}

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Modality {
    Plus,
    Minus,
}

impl Modality {
    pub const fn opposite(self) -> Modality {
        match self {
            Modality::Plus => Modality::Minus,
            Modality::Minus => Modality::Plus,
        }
    }

    pub const fn symbol(self) -> char {
        match self {
            Modality::Plus => '+',
            Modality::Minus => '-',
        }
    }

    /// The displacement that produces this modality.
    pub const fn direction(self) -> Direction {
        match self {
            Modality::Plus => Direction::Down,
            Modality::Minus => Direction::Up,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Up,
    Down,
}

impl Direction {
    pub const fn semitones(self) -> i32 {
        match self {
            Direction::Up => 1,
            Direction::Down => -1,
        }
    }

    pub const fn modality(self) -> Modality {
        match self {
            Direction::Up => Modality::Minus,
            Direction::Down => Modality::Plus,
        }
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "up" => Ok(Direction::Up),
            "down" => Ok(Direction::Down),
            other => Err(Error::Parse(format!("unknown direction {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chord {
    pub genus: Genus,
    pub root: PitchClass,
    pub modality: Modality,
}

impl Chord {
    pub const fn new(genus: Genus, root: PitchClass, modality: Modality) -> Self {
        Chord {
            genus,
            root,
            modality,
        }
    }

    pub fn pitch_classes(&self) -> PcSet {
        self.genus
            .template(self.modality)
            .iter()
            .map(|&i| self.root.transpose(i))
            .collect()
    }

    /// Parses `<root><modality>`, e.g. `C+`, `F#-`, `Bb+`.
    pub fn parse(text: &str, genus: Genus) -> Result<Chord> {
        let text = text.trim();
        let (root_text, modality) = if let Some(r) = text.strip_suffix('+') {
            (r, Modality::Plus)
        } else if let Some(r) = text.strip_suffix('-').or_else(|| text.strip_suffix('−')) {
            (r, Modality::Minus)
        } else {
            return Err(Error::Parse(format!(
                "chord {text:?} must end in + or -"
            )));
        };
        Ok(Chord::new(genus, parse_pitch_class(root_text)?, modality))
    }

    pub fn to_text(&self, style: Accidentals) -> String {
        format!("{}{}", pc_name(self.root, style), self.modality.symbol())
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&self.to_text(Accidentals::Sharps))
    }
}

pub fn pitch_classes(chord: &Chord) -> PcSet {
    chord.pitch_classes()
}

/// Recovers `(root, modality)` by template matching.
pub fn name_of(set: PcSet, genus: Genus) -> Result<Chord> {
    if set.len() == genus.cardinality() {
        for modality in [Modality::Plus, Modality::Minus] {
            let template: PcSet = PcSet::from_ints(genus.template(modality).iter().copied());
            for root in set.iter() {
                if template.transpose(root.value() as i32) == set {
                    return Ok(Chord::new(genus, root, modality));
                }
            }
        }
    }
    Err(Error::NotAMember {
        set,
        genus: genus.n(),
    })
}

/// A symmetric cell, the note moved, and the direction it moved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Perturbation {
    pub cell: PcSet,
    pub note: PitchClass,
    pub direction: Direction,
}

pub fn perturb(cell: PcSet, note: PitchClass, direction: Direction) -> Result<Chord> {
    let genus = genus_of_cell(cell).ok_or(Error::NotSymmetric(cell))?;
    if !cell.contains(note) {
        return Err(Error::NoteNotInCell {
            note: note.value(),
            cell,
        });
    }
    let moved = cell.without(note).with(note.transpose(direction.semitones()));
    let chord = name_of(moved, genus)?;
    if chord.modality != direction.modality() {
        return Err(Error::InvariantViolation(format!(
            "{direction:?} displacement of {note} in {cell} produced {chord}"
        )));
    }
    Ok(chord)
}

/// The 2n chords reached by displacing each note of `cell` down and up.
pub fn arthropod_collection(cell: PcSet) -> Result<Vec<Chord>> {
    let mut out = Vec::with_capacity(2 * cell.len());
    for note in cell.iter() {
        for direction in [Direction::Down, Direction::Up] {
            out.push(perturb(cell, note, direction)?);
        }
    }
    Ok(out)
}

/// Inverse of [`perturb`].
pub fn parent_symmetric_cell(chord: &Chord) -> Perturbation {
    let pcs = chord.pitch_classes();
    let direction = chord.modality.direction();
    // the displaced voice sits one semitone from its cell position
    for moved in pcs.iter() {
        let note = moved.transpose(-direction.semitones());
        if pcs.contains(note) {
            continue;
        }
        let cell = pcs.without(moved).with(note);
        if genus_of_cell(cell) == Some(chord.genus) {
            return Perturbation {
                cell,
                note,
                direction,
            };
        }
    }
    unreachable!("every genus member is one displacement from a symmetric cell: {chord}")
}

/// The symmetric cell of roots that a chord's bridge region is built on.
pub fn root_cell(chord: &Chord) -> PcSet {
    symmetry::cell_containing(chord.genus, chord.root)
}
