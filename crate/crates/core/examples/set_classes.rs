//! Prime forms, Forte names and interval-class vectors of the genus chords.

use nearsym::{interval_class_vector, prime_form, Chord, Genus, Modality};

fn main() -> nearsym::Result<()> {
    for genus in Genus::ALL {
        for m in [Modality::Plus, Modality::Minus] {
            let name = match m {
                Modality::Plus => genus.plus_name(),
                Modality::Minus => genus.minus_name(),
            };
            let c = Chord::new(genus, nearsym::PitchClass::C, m);
            let pcs = c.pitch_classes();
            println!(
                "{:<4} {name:<26} {:<16} {:<6} icv {:?}",
                c.to_string(),
                pcs.to_string(),
                prime_form(pcs)?.to_string(),
                interval_class_vector(pcs)
            );
        }
    }
    Ok(())
}
