//! The P(m,n) relation between chords, and single-semitone neighbours.

use nearsym::{ssd_neighbors, vl_relation, Chord, Genus};

fn main() -> nearsym::Result<()> {
    let pairs = [
        (Genus::Triads, "C+", "A-"),
        (Genus::Triads, "C+", "C#-"),
        (Genus::Triads, "C+", "F#+"),
        (Genus::Tristan, "C+", "G-"),
        (Genus::MysticWozzeck, "C+", "C-"),
        (Genus::MysticWozzeck, "C+", "D-"),
    ];
    for (genus, a, b) in pairs {
        let (x, y) = (Chord::parse(a, genus)?, Chord::parse(b, genus)?);
        let rel = match vl_relation(&x, &y)? {
            Some(r) => r.to_string(),
            None => "no whole-tone bijection".into(),
        };
        println!("{genus} {x} -> {y}: {rel}");
    }

    for genus in Genus::ALL {
        let c = Chord::parse("C+", genus)?;
        let near: Vec<String> = ssd_neighbors(&c).iter().map(ToString::to_string).collect();
        println!("{genus} single-semitone neighbours of C+: [{}]", near.join(", "));
    }
    Ok(())
}
