//! Note-name spelling. Only used at text boundaries; all arithmetic is on
//! residues.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pcset::PitchClass;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Accidentals {
    #[default]
    Sharps,
    Flats,
}

impl FromStr for Accidentals {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sharps" | "sharp" | "#" => Ok(Accidentals::Sharps),
            "flats" | "flat" | "b" => Ok(Accidentals::Flats),
            other => Err(Error::Parse(format!("unknown accidental style {other:?}"))),
        }
    }
}

impl fmt::Display for Accidentals {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Accidentals::Sharps => "sharps",
            Accidentals::Flats => "flats",
        })
    }
}

const SHARP_NAMES: [&str; 12] = [
    "C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B",
];
const FLAT_NAMES: [&str; 12] = [
    "C", "Db", "D", "Eb", "E", "F", "Gb", "G", "Ab", "A", "Bb", "B",
];

pub fn pc_name(pc: PitchClass, style: Accidentals) -> &'static str {
    let table = match style {
        Accidentals::Sharps => &SHARP_NAMES,
        Accidentals::Flats => &FLAT_NAMES,
    };
    table[pc.value() as usize]
}

/// Parses a letter name with any number of `#`/`b` (or `♯`/`♭`) accidentals.
pub fn parse_pitch_class(text: &str) -> Result<PitchClass> {
    let mut chars = text.chars();
    let letter = chars
        .next()
        .ok_or_else(|| Error::Parse("empty note name".into()))?;
    let base = match letter.to_ascii_uppercase() {
        'C' => 0,
        'D' => 2,
        'E' => 4,
        'F' => 5,
        'G' => 7,
        'A' => 9,
        'B' => 11,
        _ => return Err(Error::Parse(format!("bad note name {text:?}"))),
    };
    let mut offset = 0i32;
    for c in chars {
        match c {
            '#' | '♯' => offset += 1,
            'b' | '♭' => offset -= 1,
            _ => return Err(Error::Parse(format!("bad accidental in {text:?}"))),
        }
    }
    Ok(PitchClass::new(base + offset))
}
