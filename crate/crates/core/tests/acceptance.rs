//! Acceptance suite: one PASS/FAIL line per criterion. Counting claims are
//! checked against oracles written here, independent of the library's own
//! search code.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::panic::{self, AssertUnwindSafe};
use std::process::Command;

use nearsym::{
    apply, arthropod_collection, catalog, complementarity_pairs, enumerate_smooth_cycles, polar,
    region_of, regions, vl_relation, Chord, Genus, Kind, Modality, PcSet, PitchClass, Region,
    RegionKind, Transformation,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ch(text: &str, g: Genus) -> Chord {
    Chord::parse(text, g).unwrap_or_else(|e| panic!("{text}: {e}"))
}

fn chord_set(texts: &[&str], g: Genus) -> BTreeSet<Chord> {
    texts.iter().map(|t| ch(t, g)).collect()
}

fn pcs(values: &[i32]) -> PcSet {
    values.iter().map(|&v| PitchClass::new(v)).collect()
}

/// Minimal (displacement, whole tones) over every bijection in which no
/// voice moves more than two semitones; returns (semitone moves, whole-tone moves).
fn oracle_relation(a: PcSet, b: PcSet) -> Option<(usize, usize)> {
    let src: Vec<i32> = a.iter().map(|p| p.value() as i32).collect();
    let dst: Vec<i32> = b.iter().map(|p| p.value() as i32).collect();
    if src.len() != dst.len() {
        return None;
    }
    let mut best: Option<(usize, usize, usize)> = None;
    let mut order: Vec<usize> = (0..dst.len()).collect();
    loop {
        let mut semis = 0;
        let mut wholes = 0;
        let mut ok = true;
        for (i, &j) in order.iter().enumerate() {
            let d = (src[i] - dst[j]).rem_euclid(12);
            match d.min(12 - d) {
                0 => {}
                1 => semis += 1,
                2 => wholes += 1,
                _ => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            let key = (semis + 2 * wholes, wholes, semis);
            if best.is_none_or(|b| (key.0, key.1) < (b.0, b.1)) {
                best = Some(key);
            }
        }
        if !next_permutation(&mut order) {
            break;
        }
    }
    best.map(|(_, w, s)| (s, w))
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn pair_bit(i: usize, j: usize, size: usize) -> u128 {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    // triangular index, at most 66 pairs for 12 vertices
    1u128 << (i * (2 * size - i - 1) / 2 + (j - i - 1))
}

/// Every simple cycle of a bridge region, as edge sets. Adjacency comes from
/// the oracle relation: opposite modality and P(n-2),0. A cycle of length 2k
/// is a sequence p0 m0 p1 m1 ... with p0 the smallest chosen `+` chord.
fn oracle_cycles(region: &Region) -> HashSet<u128> {
    let n = region.genus.cardinality();
    let members = &region.members;
    let size = members.len();
    let table: Vec<Vec<bool>> = members
        .iter()
        .map(|x| {
            members
                .iter()
                .map(|y| {
                    x.modality != y.modality
                        && oracle_relation(x.pitch_classes(), y.pitch_classes()) == Some((n - 2, 0))
                })
                .collect()
        })
        .collect();
    let adjacent = |i: usize, j: usize| table[i][j];
    let plus: Vec<usize> = (0..size).filter(|&i| members[i].modality == Modality::Plus).collect();
    let minus: Vec<usize> = (0..size).filter(|&i| members[i].modality == Modality::Minus).collect();
    let mut cycles = HashSet::new();
    for k in 2..=n {
        for p in ordered_selections(&plus, k) {
            if p[1..].iter().any(|&x| x < p[0]) {
                continue;
            }
            for m in ordered_selections(&minus, k) {
                let mut walk = Vec::with_capacity(2 * k);
                for i in 0..k {
                    walk.push(p[i]);
                    walk.push(m[i]);
                }
                let closed = (0..2 * k).all(|i| adjacent(walk[i], walk[(i + 1) % (2 * k)]));
                if closed {
                    let key = (0..2 * k).fold(0, |acc, i| acc | pair_bit(walk[i], walk[(i + 1) % (2 * k)], size));
                    cycles.insert(key);
                }
            }
        }
    }
    cycles
}

fn ordered_selections(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let rest: Vec<usize> = items.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &y)| y).collect();
        for mut tail in ordered_selections(&rest, k - 1) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

fn region_adjacency(region: &Region) -> Vec<Vec<bool>> {
    let size = region.members.len();
    let idx = |c: &Chord| region.members.iter().position(|m| m == c).unwrap();
    let mut adj = vec![vec![false; size]; size];
    for e in &region.edges {
        let (a, b) = (idx(&e.a), idx(&e.b));
        adj[a][b] = true;
        adj[b][a] = true;
    }
    adj
}

fn criterion_1() -> Outcome {
    let g3 = Genus::Triads;
    let waterbug: BTreeSet<Chord> = arthropod_collection(pcs(&[8, 0, 4])).unwrap().into_iter().collect();
    ensure(waterbug == chord_set(&["C+", "A-", "E+", "C#-", "Ab+", "F-"], g3), || format!("{waterbug:?}"))?;

    let g6 = Genus::MysticWozzeck;
    let centipede: BTreeSet<Chord> = arthropod_collection(pcs(&[0, 2, 4, 6, 8, 10])).unwrap().into_iter().collect();
    let listed = chord_set(
        &["A#+", "C#-", "D+", "F-", "F#+", "A-", "G#+", "B-", "C+", "D#-", "E+", "G-"],
        g6,
    );
    ensure(centipede == listed, || format!("{centipede:?}"))?;

    // The printed spider list ends in C-, but displacing D upward from the
    // diminished seventh {C#,E,G,Bb} gives {C#,Eb,G,Bb} = C#-; C- is not in
    // the collection at all.
    let g4 = Genus::Tristan;
    let spider: BTreeSet<Chord> = arthropod_collection(pcs(&[1, 4, 7, 10])).unwrap().into_iter().collect();
    let corrected = chord_set(&["C+", "E-", "Eb+", "G-", "F#+", "A#-", "A+", "C#-"], g4);
    ensure(spider == corrected, || format!("{spider:?}"))?;
    ensure(!spider.contains(&ch("C-", g4)), || "C- present".into())?;
    Ok("waterbug, centipede, spider (C#- corrected)".into())
}

fn criterion_2() -> Outcome {
    let cases = [
        (Genus::Triads, "R", "C+", "A-"),
        (Genus::Triads, "S", "C+", "C#-"),
        (Genus::Triads, "N", "C+", "F-"),
        (Genus::Tristan, "R*", "C+", "E-"),
        (Genus::Tristan, "S3(4)", "C+", "G-"),
        (Genus::Tristan, "S3(2)", "C+", "C#-"),
        (Genus::Tristan, "S4", "C+", "F#-"),
        (Genus::Tristan, "S5", "C+", "A-"),
        (Genus::Tristan, "O", "C+", "Eb-"),
        (Genus::MysticWozzeck, "R**", "C+", "Eb-"),
        (Genus::MysticWozzeck, "S^{A(3)}", "C+", "B-"),
        (Genus::MysticWozzeck, "S1", "C+", "C-"),
        (Genus::MysticWozzeck, "Z", "C+", "D-"),
    ];
    for (g, token, from, to) in cases {
        let t = Transformation::parse(token, g).map_err(|e| e.to_string())?;
        let got = apply(t, &ch(from, g)).map_err(|e| e.to_string())?;
        ensure(got == ch(to, g), || format!("{token} {from} -> {got}, expected {to}"))?;
    }
    Ok(format!("{} examples", cases.len()))
}

fn criterion_3() -> Outcome {
    let mut count = 0;
    for g in Genus::ALL {
        for t in catalog(g) {
            for c in g.chords() {
                let once = apply(t, &c).map_err(|e| e.to_string())?;
                let twice = apply(t, &once).map_err(|e| e.to_string())?;
                ensure(twice == c, || format!("{t} on {c}: {once} -> {twice}"))?;
                count += 1;
            }
        }
    }
    ensure(count == 24 * (6 + 8 + 12), || format!("{count} assertions"))?;
    Ok(format!("{count} assertions"))
}

fn criterion_4() -> Outcome {
    for g in Genus::ALL {
        let n = g.cardinality();
        for c in g.chords() {
            let opposite = |kind| -> Vec<Chord> {
                region_of(&c, kind).members.into_iter().filter(|d| d.modality != c.modality).collect()
            };
            let rels: Vec<_> = opposite(RegionKind::Arthropod)
                .iter()
                .map(|d| oracle_relation(c.pitch_classes(), d.pitch_classes()))
                .collect();
            let p01 = rels.iter().filter(|r| **r == Some((0, 1))).count();
            let p20 = rels.iter().filter(|r| **r == Some((2, 0))).count();
            ensure(p01 == 1 && p20 == n - 1, || format!("{c} arthropod {rels:?}"))?;

            let bridge = opposite(RegionKind::Bridge);
            let slides = bridge
                .iter()
                .filter(|d| oracle_relation(c.pitch_classes(), d.pitch_classes()) == Some((n - 2, 0)))
                .count();
            let poles: Vec<&Chord> = bridge.iter().filter(|d| d.pitch_classes().is_disjoint(c.pitch_classes())).collect();
            ensure(slides == n - 1 && poles.len() == 1, || format!("{c} bridge {slides} {}", poles.len()))?;
            ensure(*poles[0] == polar(&c), || format!("{c} pole"))?;
        }
    }
    Ok("72 chords".into())
}

fn criterion_5() -> Outcome {
    let expected = [
        (Genus::Triads, pcs(&[0, 1, 4, 5, 8, 9]), 4),
        (Genus::Tristan, pcs(&[0, 1, 3, 4, 6, 7, 9, 10]), 3),
        (Genus::MysticWozzeck, PcSet::CHROMATIC, 2),
    ];
    let mut names = Vec::new();
    for (g, prime, count) in expected {
        let rs = regions(g, RegionKind::Bridge);
        ensure(rs.len() == count, || format!("n={} has {} bridges", g.n(), rs.len()))?;
        for r in &rs {
            let equivalent = (0..12).any(|t| r.pitch_union == prime.transpose(t) || r.pitch_union == prime.invert(t));
            ensure(equivalent, || format!("{} union {}", r.title(), r.pitch_union))?;
            let name = r.set_class().display_name();
            names.push(name);
        }
    }
    let distinct: BTreeSet<_> = names.iter().cloned().collect();
    ensure(
        distinct == ["12-1", "6-20", "8-28"].iter().map(|s| s.to_string()).collect(),
        || format!("{distinct:?}"),
    )?;
    Ok("6-20 x4, 8-28 x3, 12-1 x2".into())
}

fn criterion_6() -> Outcome {
    for g in Genus::ALL {
        for kind in [RegionKind::Arthropod, RegionKind::Bridge] {
            let rs = regions(g, kind);
            ensure(rs.len() == 12 / g.cardinality(), || format!("n={} {kind}: {}", g.n(), rs.len()))?;
            let mut seen = BTreeSet::new();
            for r in &rs {
                for c in &r.members {
                    ensure(seen.insert(*c), || format!("{c} in two {kind} regions"))?;
                }
            }
            let all: BTreeSet<Chord> = g.chords().into_iter().collect();
            ensure(seen == all, || format!("n={} {kind} cover", g.n()))?;
        }
    }
    Ok("4/3/2 regions of each kind".into())
}

fn criterion_7() -> Outcome {
    for g in Genus::ALL {
        let n = g.cardinality();
        for r in regions(g, RegionKind::Bridge) {
            let adj = region_adjacency(&r);
            let degrees: Vec<usize> = adj.iter().map(|row| row.iter().filter(|&&x| x).count()).collect();
            ensure(degrees.len() == 2 * n && degrees.iter().all(|&d| d == n - 1), || format!("{} {degrees:?}", r.title()))?;
            match g {
                Genus::Triads => {
                    // connected and 2-regular: a single hexagon
                    let mut reached = BTreeSet::from([0]);
                    let mut frontier = vec![0];
                    while let Some(v) = frontier.pop() {
                        for (w, &linked) in adj[v].iter().enumerate() {
                            if linked && reached.insert(w) {
                                frontier.push(w);
                            }
                        }
                    }
                    ensure(reached.len() == 6, || format!("{} disconnected", r.title()))?;
                }
                Genus::Tristan => {
                    let cube = |a: usize, b: usize| (a ^ b).count_ones() == 1;
                    let mut order: Vec<usize> = (0..8).collect();
                    let mut found = false;
                    loop {
                        if (0..8).all(|i| (0..8).all(|j| adj[i][j] == cube(order[i], order[j]))) {
                            found = true;
                            break;
                        }
                        if !next_permutation(&mut order) {
                            break;
                        }
                    }
                    ensure(found, || format!("{} not a cube", r.title()))?;
                }
                Genus::MysticWozzeck => {
                    for (i, a) in r.members.iter().enumerate() {
                        for (j, b) in r.members.iter().enumerate() {
                            let expect = a.modality != b.modality && !a.pitch_classes().is_disjoint(b.pitch_classes());
                            ensure(adj[i][j] == expect, || format!("{a} {b}"))?;
                        }
                    }
                }
            }
        }
    }
    Ok("hexagons, cubes, K(6,6) minus matching".into())
}

fn criterion_8() -> Outcome {
    let mut report = BTreeMap::new();
    for g in Genus::ALL {
        for r in regions(g, RegionKind::Bridge) {
            let size = r.members.len();
            let oracle = oracle_cycles(&r);
            let listed = enumerate_smooth_cycles(&r, 4, size).map_err(|e| e.to_string())?;
            let idx = |c: &Chord| r.members.iter().position(|m| m == c).unwrap();
            let keys: HashSet<u128> = listed
                .iter()
                .map(|cyc| {
                    let k = cyc.len();
                    (0..k).fold(0, |acc, i| acc | pair_bit(idx(&cyc.chords[i]), idx(&cyc.chords[(i + 1) % k]), size))
                })
                .collect();
            ensure(keys.len() == listed.len(), || format!("{} duplicate cycles", r.title()))?;
            ensure(keys == oracle, || format!("{}: {} listed vs {} oracle", r.title(), keys.len(), oracle.len()))?;
            let mut by_len: BTreeMap<usize, usize> = BTreeMap::new();
            for c in &listed {
                *by_len.entry(c.len()).or_default() += 1;
            }
            report.insert(g.n(), by_len);
        }
    }
    let expect = |pairs: &[(usize, usize)]| pairs.iter().copied().collect::<BTreeMap<_, _>>();
    ensure(report[&3] == expect(&[(6, 1)]), || format!("{:?}", report[&3]))?;
    ensure(report[&4] == expect(&[(4, 6), (6, 16), (8, 6)]), || format!("{:?}", report[&4]))?;
    // Hamiltonian count fixed by a standalone enumeration before the build
    ensure(report[&6].get(&12) == Some(&4800), || format!("{:?}", report[&6]))?;
    Ok(format!("hexatonic 1, octatonic 28, dodecatonic {:?}", report[&6]))
}

fn criterion_9() -> Outcome {
    let tokens = |g| -> Vec<(String, String)> {
        complementarity_pairs(g).pairs.iter().map(|(a, b)| (a.token.to_string(), b.token.to_string())).collect()
    };
    let has = |pairs: &[(String, String)], a: &str, b: &str| pairs.iter().any(|(x, y)| x == a && y == b);
    let p3 = tokens(Genus::Triads);
    ensure(has(&p3, "S", "P"), || format!("{p3:?}"))?;
    for (g, a, b) in [(Genus::Tristan, "S3(4)", "S4"), (Genus::MysticWozzeck, "SA(3)", "S3(A)")] {
        let pairs = tokens(g);
        ensure(has(&pairs, a, b), || format!("{pairs:?}"))?;
        let slides = catalog(g).iter().filter(|t| t.kind == Kind::ArthropodSlide).count();
        ensure(pairs.len() == slides, || format!("n={}: {} of {slides} paired", g.n(), pairs.len()))?;
    }
    Ok("every n=4 and n=6 arthropod slide paired".into())
}

fn criterion_10() -> Outcome {
    let mut count = 0;
    for g in Genus::ALL {
        let chords = g.chords();
        for x in &chords {
            for y in &chords {
                let lib = vl_relation(x, y).map_err(|e| e.to_string())?.map(|r| (r.semitones, r.whole_tones));
                let oracle = oracle_relation(x.pitch_classes(), y.pitch_classes());
                ensure(lib == oracle, || format!("{x} {y}: {lib:?} vs {oracle:?}"))?;
                count += 1;
            }
        }
    }
    ensure(count == 1728, || format!("{count} pairs"))?;
    Ok(format!("{count} pairs"))
}

fn criterion_11() -> Outcome {
    let run = |args: &[&str]| -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_nearsym"))
            .args(args)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || format!("{args:?} exited {:?}", out.status.code()))?;
        Ok(out.stdout)
    };
    let mut invocations: Vec<Vec<String>> = vec![
        vec!["verify".into()],
        vec!["verify".into(), "--format".into(), "json".into()],
    ];
    for g in Genus::ALL {
        for kind in [RegionKind::Arthropod, RegionKind::Bridge] {
            for r in regions(g, kind) {
                let containing = r.members[0].to_string();
                for format in ["dot", "json"] {
                    invocations.push(
                        [
                            "export", "--genus", &g.n().to_string(), "--kind", kind.as_str(),
                            "--containing", &containing, "--format", format,
                        ]
                        .iter()
                        .map(|s| s.to_string())
                        .collect(),
                    );
                }
            }
        }
    }
    for args in &invocations {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (first, second) = (run(&args)?, run(&args)?);
        ensure(!first.is_empty() && first == second, || format!("{args:?} differs"))?;
    }
    Ok(format!("{} invocations run twice", invocations.len()))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("region reproduction", criterion_1),
        ("named examples", criterion_2),
        ("involution law", criterion_3),
        ("partner counts", criterion_4),
        ("bridge union set classes", criterion_5),
        ("region partitions", criterion_6),
        ("graph shapes", criterion_7),
        ("cycle oracle equivalence", criterion_8),
        ("complementarity", criterion_9),
        ("voice-leading oracle equivalence", criterion_10),
        ("determinism", criterion_11),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
