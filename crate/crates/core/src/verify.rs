//! Built-in verification suite: every structural claim about the three genera,
//! checked exhaustively over the 24 chords of each genus.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::chord::{arthropod_collection, name_of, parent_symmetric_cell, perturb, Chord, Direction, Genus};
use crate::export::{export_graph, Format};
use crate::pcset::{interval_class_vector, prime_form, PcSet};
use crate::region::{
    complementarity_pairs, enumerate_smooth_cycles, polar, region_of, regions, Region, RegionKind,
};
use crate::symmetry::{cycle_from_generator, generators_of_z12, partition_of};
use crate::transform::{apply, catalog, slide_move, transformation_between, Kind};
use crate::voiceleading::{exhaustive_relation, set_relation, vl_relation, VoiceLeading};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    /// `None` for genus-independent checks.
    pub genus: Option<u8>,
    pub claim: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let scope = c.genus.map_or_else(|| "all".to_string(), |n| format!("n={n}"));
            let status = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} [{scope}] {}: {} ({})\n", c.id, c.claim, c.detail));
        }
        out.push_str(&format!(
            "{} passed, {} failed\n",
            self.passed, self.failed
        ));
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

type Outcome = std::result::Result<String, String>;

struct Suite {
    checks: Vec<Check>,
}

impl Suite {
    fn check(&mut self, id: &str, genus: Option<Genus>, claim: &str, f: impl FnOnce() -> Outcome) {
        let (passed, detail) = match f() {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.checks.push(Check {
            id: id.to_string(),
            genus: genus.map(Genus::n),
            claim: claim.to_string(),
            passed,
            detail,
        });
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Runs every check; `genus` restricts the genus-specific ones.
pub fn run(genus: Option<Genus>) -> Report {
    let mut suite = Suite { checks: Vec::new() };
    if genus.is_none() {
        general_checks(&mut suite);
    }
    let genera: Vec<Genus> = match genus {
        Some(g) => vec![g],
        None => Genus::ALL.to_vec(),
    };
    for g in genera {
        genus_checks(&mut suite, g);
    }
    let passed = suite.checks.iter().filter(|c| c.passed).count();
    let failed = suite.checks.len() - passed;
    Report {
        checks: suite.checks,
        passed,
        failed,
    }
}

fn general_checks(s: &mut Suite) {
    s.check("z12-generators", None, "Z12 is generated by exactly 1, 5, 7, 11", || {
        let gens = generators_of_z12();
        ensure(gens == BTreeSet::from([1, 5, 7, 11]), || format!("{gens:?}"))?;
        for g in [1i64, 5, 7, 11] {
            for start in crate::pcset::PitchClass::all() {
                let walk: PcSet = cycle_from_generator(g, start)
                    .map_err(|e| e.to_string())?
                    .into_iter()
                    .collect();
                ensure(walk == PcSet::CHROMATIC, || format!("generator {g} from {start}"))?;
            }
        }
        Ok("48 walks are permutations".into())
    });

    s.check(
        "set-class-invariance",
        None,
        "prime form and interval-class vector are invariant under Tn and TnI",
        || {
            for bits in 1..=0x0fffu16 {
                let set = PcSet::from_bits(bits);
                let p = prime_form(set).map_err(|e| e.to_string())?;
                let icv = interval_class_vector(set);
                for t in 0..12 {
                    for image in [set.transpose(t), set.invert(t)] {
                        ensure(prime_form(image).ok().as_ref() == Some(&p), || format!("{set}"))?;
                        ensure(interval_class_vector(image) == icv, || format!("{set}"))?;
                    }
                }
            }
            Ok("4095 sets x 24 images".into())
        },
    );
}

fn genus_checks(s: &mut Suite, genus: Genus) {
    let n = genus.cardinality();
    let g = Some(genus);
    let chords = genus.chords();

    s.check("symmetric-partition", g, "12/n disjoint cells spaced by 12/n cover the octave", || {
        let p = partition_of(genus);
        ensure(p.cells.len() == 12 / n, || format!("{} cells", p.cells.len()))?;
        let mut union = PcSet::EMPTY;
        for cell in &p.cells {
            ensure(cell.len() == n && union.is_disjoint(*cell), || format!("{cell}"))?;
            ensure(cell.transpose(genus.step()) == *cell, || format!("{cell} not symmetric"))?;
            union = union.union(*cell);
        }
        ensure(union == PcSet::CHROMATIC, || format!("union {union}"))?;
        Ok(format!("{} cells", p.cells.len()))
    });

    s.check("chord-universe", g, "24 chords with distinct pitch-class sets, each nameable", || {
        let sets: BTreeSet<PcSet> = chords.iter().map(Chord::pitch_classes).collect();
        ensure(sets.len() == 24, || format!("{} distinct sets", sets.len()))?;
        for c in &chords {
            ensure(name_of(c.pitch_classes(), genus) == Ok(*c), || format!("{c}"))?;
        }
        Ok("24 chords".into())
    });

    s.check("perturbation-round-trip", g, "parent_symmetric_cell inverts perturb", || {
        let mut count = 0;
        for cell in partition_of(genus).cells {
            for note in cell.iter() {
                for dir in [Direction::Down, Direction::Up] {
                    let c = perturb(cell, note, dir).map_err(|e| e.to_string())?;
                    let back = parent_symmetric_cell(&c);
                    ensure(
                        (back.cell, back.note, back.direction) == (cell, note, dir),
                        || format!("{c}"),
                    )?;
                    ensure(c.modality == dir.modality(), || format!("{c} modality"))?;
                    count += 1;
                }
            }
        }
        Ok(format!("{count} displacements"))
    });

    s.check("inversional-pairs", g, "opposite displacements of one note are inversionally related", || {
        for cell in partition_of(genus).cells {
            for note in cell.iter() {
                let down = perturb(cell, note, Direction::Down).map_err(|e| e.to_string())?;
                let up = perturb(cell, note, Direction::Up).map_err(|e| e.to_string())?;
                let (a, b) = (down.pitch_classes(), up.pitch_classes());
                ensure((0..12).any(|axis| a.invert(axis) == b), || format!("{down} / {up}"))?;
            }
        }
        Ok(format!("{n} pairs per cell"))
    });

    if genus == Genus::MysticWozzeck {
        s.check("hexachord-root-rule", g, "root is the lower note of the unique semitone dyad", || {
            for c in &chords {
                let pcs = c.pitch_classes();
                ensure(interval_class_vector(pcs)[0] == 1, || format!("{c} ic1 count"))?;
                let lower: Vec<_> = pcs.iter().filter(|p| pcs.contains(p.transpose(1))).collect();
                ensure(lower == vec![c.root], || format!("{c}"))?;
            }
            Ok("24 chords".into())
        });
    }

    s.check("vl-oracle", g, "subset DP agrees with exhaustive bijection search on all pairs", || {
        for x in &chords {
            for y in &chords {
                let (a, b) = (x.pitch_classes(), y.pitch_classes());
                let dp = set_relation(a, b);
                ensure(dp == exhaustive_relation(a, b), || format!("{x} {y}"))?;
                ensure(dp == set_relation(b, a), || format!("asymmetric {x} {y}"))?;
            }
            ensure(
                vl_relation(x, x).ok().flatten() == Some(VoiceLeading::IDENTITY),
                || format!("{x} identity"),
            )?;
        }
        Ok("576 pairs".into())
    });

    s.check("involution", g, "every catalog transformation is an involution swapping modality", || {
        let mut count = 0;
        for c in &chords {
            for t in catalog(genus) {
                let d = apply(t, c).map_err(|e| e.to_string())?;
                ensure(d.modality != c.modality, || format!("{t} {c} keeps modality"))?;
                let back = apply(t, &d).map_err(|e| e.to_string())?;
                ensure(back == *c, || format!("{t} {c} -> {d} -> {back}"))?;
                count += 1;
            }
        }
        Ok(format!("{count} applications"))
    });

    s.check("relation-conformance", g, "Relative is P0,1, arthropod slides P2,0, bridge slides P(n-2),0, poles disjoint", || {
        for c in &chords {
            for t in catalog(genus) {
                let d = apply(t, c).map_err(|e| e.to_string())?;
                match t.expected_relation() {
                    Some(rel) => ensure(
                        vl_relation(c, &d).ok().flatten() == Some(rel),
                        || format!("{t} {c} -> {d}"),
                    )?,
                    None => ensure(
                        c.pitch_classes().is_disjoint(d.pitch_classes()),
                        || format!("{t} {c} -> {d} shares pitches"),
                    )?,
                }
            }
        }
        if genus == Genus::Triads {
            for c in &chords {
                ensure(
                    vl_relation(c, &polar(c)).ok().flatten() == Some(VoiceLeading::new(3, 0)),
                    || format!("hexatonic pole of {c}"),
                )?;
            }
        }
        Ok(format!("{} transformations", catalog(genus).len()))
    });

    s.check("region-closure", g, "arthropod kinds stay in the arthropod region, bridge kinds in the bridge region", || {
        for c in &chords {
            let arth = region_of(c, RegionKind::Arthropod);
            let bridge = region_of(c, RegionKind::Bridge);
            for t in catalog(genus) {
                let d = apply(t, c).map_err(|e| e.to_string())?;
                let home = if t.kind.in_arthropod() { &arth } else { &bridge };
                ensure(home.contains(&d), || format!("{t} {c} -> {d} leaves {}", home.title()))?;
            }
        }
        Ok("all applications".into())
    });

    s.check("slide-labels", g, "held and moved pitch classes match each slide's set classes", || {
        for c in &chords {
            for t in catalog(genus) {
                let Some(spec) = t.slide else { continue };
                let m = slide_move(t, c).map_err(|e| e.to_string())?;
                ensure(spec.held.matches(m.held), || format!("{t} {c} held {}", m.held))?;
                ensure(spec.moved.matches(m.moved), || format!("{t} {c} moved {}", m.moved))?;
                ensure(m.held.union(m.moved) == c.pitch_classes(), || format!("{t} {c}"))?;
            }
        }
        Ok("unique realization per application".into())
    });

    s.check("catalog-completeness", g, "the catalog reaches all 2n opposite-modality chords of both regions without collisions", || {
        for c in &chords {
            let mut expected: BTreeSet<Chord> = BTreeSet::new();
            for kind in [RegionKind::Arthropod, RegionKind::Bridge] {
                expected.extend(region_of(c, kind).members.into_iter().filter(|d| d.modality != c.modality));
            }
            let reached: Vec<Chord> = catalog(genus)
                .iter()
                .map(|t| apply(t, c))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            let distinct: BTreeSet<Chord> = reached.iter().copied().collect();
            ensure(distinct.len() == reached.len(), || format!("collision from {c}"))?;
            ensure(distinct == expected, || format!("{c} reaches {}", distinct.len()))?;
        }
        Ok(format!("{} targets per chord", 2 * n))
    });

    s.check("arthropod-counts", g, "each chord has 1 P0,1 and n-1 P2,0 opposite-modality partners in its arthropod region", || {
        for c in &chords {
            let r = region_of(c, RegionKind::Arthropod);
            let rels = partner_relations(c, &r);
            let ones = rels.iter().filter(|r| **r == Some(VoiceLeading::new(0, 1))).count();
            let twos = rels.iter().filter(|r| **r == Some(VoiceLeading::new(2, 0))).count();
            ensure(ones == 1 && twos == n - 1 && rels.len() == n, || format!("{c}: {rels:?}"))?;
        }
        Ok(format!("1 + {}", n - 1))
    });

    s.check("bridge-counts", g, "each chord has n-1 P(n-2),0 partners and one disjoint pole in its bridge region", || {
        for c in &chords {
            let r = region_of(c, RegionKind::Bridge);
            let opposite: Vec<Chord> = r.members.iter().copied().filter(|d| d.modality != c.modality).collect();
            let slides = opposite
                .iter()
                .filter(|d| vl_relation(c, d).ok().flatten() == Some(VoiceLeading::new(n - 2, 0)))
                .count();
            let poles: Vec<&Chord> = opposite
                .iter()
                .filter(|d| d.pitch_classes().is_disjoint(c.pitch_classes()))
                .collect();
            ensure(slides == n - 1, || format!("{c}: {slides} slide partners"))?;
            ensure(poles.len() == 1, || format!("{c}: {} poles", poles.len()))?;
            let pole = *poles[0];
            ensure(pole == polar(c), || format!("{c}: polar() disagrees"))?;
            ensure(
                pole.pitch_classes() == r.pitch_union.difference(c.pitch_classes()),
                || format!("{c}: pole is not the complement in the region"),
            )?;
        }
        Ok(format!("{} + 1", n - 1))
    });

    s.check("region-partitions", g, "arthropod and bridge regions each partition the 24 chords", || {
        for kind in [RegionKind::Arthropod, RegionKind::Bridge] {
            let rs = regions(genus, kind);
            ensure(rs.len() == 12 / n, || format!("{} {kind} regions", rs.len()))?;
            let mut seen = BTreeSet::new();
            for r in &rs {
                ensure(r.members.len() == 2 * n, || r.title())?;
                for c in &r.members {
                    ensure(seen.insert(*c), || format!("{c} twice"))?;
                }
            }
            ensure(seen.len() == 24, || format!("{kind} covers {}", seen.len()))?;
        }
        let arth: BTreeSet<Chord> = partition_of(genus)
            .cells
            .into_iter()
            .flat_map(|cell| arthropod_collection(cell).unwrap_or_default())
            .collect();
        ensure(arth.len() == 24, || "arthropod collections".into())?;
        Ok(format!("{} + {} regions", 12 / n, 12 / n))
    });

    let union_name = match genus {
        Genus::Triads => "6-20",
        Genus::Tristan => "8-28",
        Genus::MysticWozzeck => "12-1",
    };
    s.check("bridge-unions", g, "bridge-region pitch unions have the tabulated set class", || {
        for r in regions(genus, RegionKind::Bridge) {
            let label = r.set_class();
            ensure(label.forte_name == Some(union_name), || format!("{}: {label}", r.title()))?;
        }
        Ok(union_name.into())
    });

    s.check("graph-shape", g, "arthropod graphs are K(n,n); bridge graphs are K(n,n) minus a perfect matching", || {
        for r in regions(genus, RegionKind::Arthropod) {
            ensure(r.edges.len() == n * n, || r.title())?;
            for c in &r.members {
                let relatives = r
                    .edges
                    .iter()
                    .filter(|e| (e.a == *c || e.b == *c) && e.transform.kind == Kind::Relative)
                    .count();
                ensure(r.neighbors(c).len() == n && relatives == 1, || format!("{c}"))?;
            }
        }
        for r in regions(genus, RegionKind::Bridge) {
            ensure(r.edges.len() == n * n - n, || r.title())?;
            for c in &r.members {
                ensure(r.neighbors(c).len() == n - 1, || format!("{c} degree"))?;
                let missing: Vec<&Chord> = r
                    .members
                    .iter()
                    .filter(|d| d.modality != c.modality && r.edge_between(c, d).is_none())
                    .collect();
                ensure(missing.len() == 1, || format!("{c} non-neighbors"))?;
                ensure(
                    missing[0].pitch_classes().is_disjoint(c.pitch_classes()),
                    || format!("{c} missing pair not disjoint"),
                )?;
            }
            match genus {
                Genus::Triads => ensure(is_single_cycle(&r), || format!("{} is not a hexagon", r.title()))?,
                Genus::Tristan => ensure(isomorphic_to_cube(&r), || format!("{} is not a cube", r.title()))?,
                Genus::MysticWozzeck => {}
            }
        }
        Ok(match genus {
            Genus::Triads => "hexagons".into(),
            Genus::Tristan => "cubes".into(),
            Genus::MysticWozzeck => "5-regular on 12 vertices".into(),
        })
    });

    s.check("edge-labels", g, "every edge label is the unique catalog transformation between its ends", || {
        for kind in [RegionKind::Arthropod, RegionKind::Bridge] {
            for r in regions(genus, kind) {
                for e in &r.edges {
                    let t = transformation_between(&e.a, &e.b).map_err(|e| e.to_string())?;
                    ensure(t == Some(e.transform), || format!("{} {}", e.a, e.b))?;
                }
            }
        }
        Ok("all edges".into())
    });

    s.check("smooth-cycles", g, "cycle enumeration matches subset-DP counts; Hamiltonian cycles exist and cover the region union", || {
        let mut summary = BTreeMap::new();
        for r in regions(genus, RegionKind::Bridge) {
            let cycles = enumerate_smooth_cycles(&r, 4, 2 * n).map_err(|e| e.to_string())?;
            let mut by_len: BTreeMap<usize, u64> = BTreeMap::new();
            for c in &cycles {
                *by_len.entry(c.len()).or_default() += 1;
                let k = c.len();
                let distinct: BTreeSet<&Chord> = c.chords.iter().collect();
                ensure(distinct.len() == k, || "repeated chord".into())?;
                for i in 0..k {
                    let (x, y) = (c.chords[i], c.chords[(i + 1) % k]);
                    ensure(x.modality != y.modality && r.edge_between(&x, &y).is_some(), || {
                        format!("{x} {y} not adjacent")
                    })?;
                }
                if c.is_hamiltonian(&r) {
                    ensure(c.pitch_union == r.pitch_union, || "Hamiltonian union".into())?;
                }
            }
            let counted = count_cycles_by_length(&r);
            ensure(by_len == counted, || format!("{by_len:?} vs {counted:?}"))?;
            ensure(by_len.get(&(2 * n)).copied().unwrap_or(0) > 0, || "no Hamiltonian cycle".into())?;
            summary = by_len;
        }
        if genus == Genus::Triads {
            ensure(summary == BTreeMap::from([(6, 1)]), || format!("{summary:?}"))?;
        }
        Ok(format!("{summary:?} per region"))
    });

    s.check("complementarity", g, "held and moved parts swap between arthropod and bridge slides", || {
        let comp = complementarity_pairs(genus);
        let arth_slides = catalog(genus).iter().filter(|t| t.kind == Kind::ArthropodSlide).count();
        ensure(comp.pairs.len() == arth_slides, || format!("{} of {arth_slides} paired", comp.pairs.len()))?;
        let tokens: Vec<String> = comp.pairs.iter().map(|(a, b)| format!("{a}/{b}")).collect();
        Ok(tokens.join(" "))
    });

    s.check("polar", g, "pole shares no pitch classes and equals the polar transformation", || {
        for c in &chords {
            let p = polar(c);
            ensure(p.pitch_classes().is_disjoint(c.pitch_classes()), || format!("{c}"))?;
            ensure(polar(&p) == *c, || format!("{c} pole not involutive"))?;
        }
        Ok("24 poles".into())
    });

    s.check("deterministic-export", g, "DOT and JSON exports are byte-identical across runs", || {
        for kind in [RegionKind::Arthropod, RegionKind::Bridge] {
            for r in regions(genus, kind) {
                for f in [Format::Dot, Format::Json] {
                    ensure(export_graph(&r, f) == export_graph(&r, f), || r.title())?;
                }
            }
        }
        Ok("all regions".into())
    });
}

fn partner_relations(c: &Chord, r: &Region) -> Vec<Option<VoiceLeading>> {
    r.members
        .iter()
        .filter(|d| d.modality != c.modality)
        .map(|d| vl_relation(c, d).ok().flatten())
        .collect()
}

fn adjacency(r: &Region) -> Vec<u16> {
    let idx = |c: &Chord| r.members.iter().position(|m| m == c).expect("member");
    let mut adj = vec![0u16; r.members.len()];
    for e in &r.edges {
        let (a, b) = (idx(&e.a), idx(&e.b));
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    adj
}

/// Simple cycles counted by length via paths from each subset's smallest
/// vertex; independent of the DFS listing.
fn count_cycles_by_length(r: &Region) -> BTreeMap<usize, u64> {
    let adj = adjacency(r);
    let size = adj.len();
    let mut paths = vec![vec![0u64; size]; 1 << size];
    for s in 0..size {
        paths[1 << s][s] = 1;
    }
    let mut totals: BTreeMap<usize, u64> = BTreeMap::new();
    for mask in 1usize..(1 << size) {
        let start = mask.trailing_zeros() as usize;
        for v in 0..size {
            let count = paths[mask][v];
            if count == 0 {
                continue;
            }
            let len = mask.count_ones() as usize;
            if len >= 3 && adj[v] & (1 << start) != 0 {
                *totals.entry(len).or_default() += count;
            }
            for w in (start + 1)..size {
                if mask & (1 << w) == 0 && adj[v] & (1 << w) != 0 {
                    paths[mask | (1 << w)][w] += count;
                }
            }
        }
    }
    // each cycle was counted once per direction
    totals.into_iter().map(|(k, v)| (k, v / 2)).collect()
}

fn is_single_cycle(r: &Region) -> bool {
    let adj = adjacency(r);
    if adj.iter().any(|a| a.count_ones() != 2) {
        return false;
    }
    let (mut prev, mut cur, mut steps) = (usize::MAX, 0usize, 0);
    loop {
        let next = (0..adj.len())
            .find(|&w| adj[cur] & (1 << w) != 0 && w != prev)
            .expect("degree two");
        prev = cur;
        cur = next;
        steps += 1;
        if cur == 0 {
            return steps == adj.len();
        }
    }
}

/// Backtracking search for a bijection onto the 3-cube.
fn isomorphic_to_cube(r: &Region) -> bool {
    let adj = adjacency(r);
    if adj.len() != 8 {
        return false;
    }
    let cube: Vec<u16> = (0..8u16)
        .map(|v| (0..3).fold(0, |acc, bit| acc | 1 << (v ^ (1 << bit))))
        .collect();
    fn place(k: usize, map: &mut [usize; 8], used: &mut u16, adj: &[u16], cube: &[u16]) -> bool {
        if k == 8 {
            return true;
        }
        for image in 0..8 {
            if *used & (1 << image) != 0 {
                continue;
            }
            let consistent = (0..k).all(|j| {
                let region_edge = adj[k] & (1 << j) != 0;
                let cube_edge = cube[image] & (1 << map[j]) != 0;
                region_edge == cube_edge
            });
            if consistent {
                map[k] = image;
                *used |= 1 << image;
                if place(k + 1, map, used, adj, cube) {
                    return true;
                }
                *used &= !(1 << image);
            }
        }
        false
    }
    place(0, &mut [0; 8], &mut 0, &adj, &cube)
}
