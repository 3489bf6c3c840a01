//! The transformation catalog of each genus applied to C+, plus a sequence.

use nearsym::transform::slide_move;
use nearsym::{apply, apply_sequence, catalog, parse_sequence, vl_relation, Chord, Genus};

fn main() -> nearsym::Result<()> {
    for genus in Genus::ALL {
        let c = Chord::parse("C+", genus)?;
        println!("{genus}");
        for t in catalog(genus) {
            let d = apply(t, &c)?;
            let rel = vl_relation(&c, &d)?.map_or("disjoint".to_string(), |r| r.to_string());
            let how = match slide_move(t, &c) {
                Ok(m) => format!("hold {} move {} by {:+}", m.held, m.moved, m.shift),
                Err(_) => String::new(),
            };
            println!("  {:<6} {:<10} {c} -> {d:<4} {rel:<8} {how}", t.token, t.full_form);
        }
    }

    let seq = parse_sequence("S1, Z", Genus::MysticWozzeck)?;
    let start = Chord::parse("C+", Genus::MysticWozzeck)?;
    println!("S1,Z on {start}: {}", apply_sequence(&start, &seq)?);

    // tokens copied with superscript braces parse too
    let t = nearsym::Transformation::parse("S^{3(4)}", Genus::Tristan)?;
    println!("{} on C+: {}", t.token, apply(t, &Chord::parse("C+", Genus::Tristan)?)?);
    Ok(())
}
