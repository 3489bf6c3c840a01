//! Arthropod and bridge regions: members, labeled edges, pitch unions, poles.

use nearsym::{complementarity_pairs, polar, regions, Chord, Genus, RegionKind};

fn main() -> nearsym::Result<()> {
    for genus in Genus::ALL {
        for kind in [RegionKind::Arthropod, RegionKind::Bridge] {
            for r in regions(genus, kind) {
                let members: Vec<String> = r.members.iter().map(ToString::to_string).collect();
                println!(
                    "{:<24} {:<22} {} edges, union {}",
                    r.title(),
                    r.set_class().to_string(),
                    r.edges.len(),
                    r.pitch_union
                );
                println!("    {}", members.join(" "));
            }
        }
    }

    let c = Chord::parse("C+", Genus::Tristan)?;
    println!("octatonic pole of {c}: {}", polar(&c));

    for genus in Genus::ALL {
        let comp = complementarity_pairs(genus);
        let pairs: Vec<String> = comp.pairs.iter().map(|(a, b)| format!("{a}/{b}")).collect();
        println!("{genus} complementary slides: {}", pairs.join(" "));
    }
    Ok(())
}
