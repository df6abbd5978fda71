//! JSON structure files: sparse coefficient lists with exact rational
//! literals, printed canonically so that round trips are byte-identical.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Deserialize;

use crate::ainf2::{AInf2, AInf2Morphism, TwoTermComplex};
use crate::cohom::DiffCochain;
use crate::corresp::CrossedModule;
use crate::diffainf2::{DiffAInf2Morphism, DiffOp2, TwoTermDiffAInf};
use crate::diffalg::{AssocAlgebra, Bimodule, DiffBimodule, DifferenceAlgebra};
use crate::exactlin::{format_rational, parse_rational, Lin, MultiMap, Space, Vector};
use crate::hbimod::{DiffHBimod2, HBimod2};
use crate::twoalg::{DiffAss2, TwoVec};
use crate::{Error, Result};

pub const FORMAT_VERSION: u32 = 1;

type Entries = Vec<(Vec<usize>, String)>;

/// Every kind of structure a file can hold.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Algebra(AssocAlgebra),
    DiffAlgebra(DifferenceAlgebra),
    DiffBimodule(DifferenceAlgebra, DiffBimodule),
    AInf2(AInf2),
    DiffAInf2(TwoTermDiffAInf),
    DiffMorphism {
        src: TwoTermDiffAInf,
        dst: TwoTermDiffAInf,
        mor: DiffAInf2Morphism,
    },
    Cochain {
        da: DifferenceAlgebra,
        bm: DiffBimodule,
        cochain: DiffCochain,
    },
    CrossedModule(CrossedModule),
    HBimod(AssocAlgebra, HBimod2),
    DiffHBimod(DifferenceAlgebra, DiffHBimod2),
    DiffAss2(DiffAss2),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Algebra(_) => "algebra",
            Structure::DiffAlgebra(_) => "diff_algebra",
            Structure::DiffBimodule(..) => "diff_bimodule",
            Structure::AInf2(_) => "ainf2",
            Structure::DiffAInf2(_) => "diff_ainf2",
            Structure::DiffMorphism { .. } => "diff_morphism",
            Structure::Cochain { .. } => "cochain",
            Structure::CrossedModule(_) => "crossed_module",
            Structure::HBimod(..) => "hbimod",
            Structure::DiffHBimod(..) => "diff_hbimod",
            Structure::DiffAss2(_) => "diffass2",
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    kind: String,
    version: u32,
    spaces: BTreeMap<String, usize>,
    maps: BTreeMap<String, RawMap>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMap {
    src: Vec<String>,
    dst: String,
    entries: Entries,
}

/// A map in file form; an empty `src` encodes a vector.
struct FileMap {
    src: Vec<String>,
    dst: String,
    entries: Entries,
}

#[derive(Default)]
struct Encoder {
    spaces: BTreeMap<String, usize>,
    maps: BTreeMap<String, FileMap>,
}

impl Encoder {
    fn space(&mut self, name: &str, s: &Space) {
        self.spaces.insert(name.to_string(), s.dim);
    }

    fn multi(&mut self, name: &str, m: &MultiMap, src: &[&str], dst: &str) {
        let mut entries: Vec<_> = m
            .nonzeros()
            .map(|(o, idx, c)| {
                let mut key = vec![o];
                key.extend(idx);
                (key, format_rational(c))
            })
            .collect();
        entries.sort();
        self.put(name, src, dst, entries);
    }

    fn lin(&mut self, name: &str, f: &Lin, src: &str, dst: &str) {
        self.multi(name, f.as_multi(), &[src], dst);
    }

    fn vector(&mut self, name: &str, v: &[crate::exactlin::Rational], dst: &str) {
        let entries = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
            .map(|(i, c)| (vec![i], format_rational(c)))
            .collect();
        self.put(name, &[], dst, entries);
    }

    fn put(&mut self, name: &str, src: &[&str], dst: &str, entries: Entries) {
        let map = FileMap {
            src: src.iter().map(|s| s.to_string()).collect(),
            dst: dst.to_string(),
            entries,
        };
        self.maps.insert(name.to_string(), map);
    }

    fn print(&self, kind: &str) -> String {
        let q = |s: &str| serde_json::to_string(s).expect("strings serialize");
        let mut out = String::new();
        let _ = writeln!(out, "{{\n  \"kind\": {},\n  \"maps\": {{", q(kind));
        for (k, (name, m)) in self.maps.iter().enumerate() {
            let _ = writeln!(out, "    {}: {{", q(name));
            let _ = writeln!(out, "      \"dst\": {},", q(&m.dst));
            if m.entries.is_empty() {
                let _ = writeln!(out, "      \"entries\": [],");
            } else {
                let _ = writeln!(out, "      \"entries\": [");
                for (j, (idx, c)) in m.entries.iter().enumerate() {
                    let idx: Vec<String> = idx.iter().map(usize::to_string).collect();
                    let comma = if j + 1 < m.entries.len() { "," } else { "" };
                    let _ = writeln!(out, "        [[{}], {}]{comma}", idx.join(", "), q(c));
                }
                let _ = writeln!(out, "      ],");
            }
            let src: Vec<String> = m.src.iter().map(|s| q(s)).collect();
            let _ = writeln!(out, "      \"src\": [{}]", src.join(", "));
            let comma = if k + 1 < self.maps.len() { "," } else { "" };
            let _ = writeln!(out, "    }}{comma}");
        }
        let spaces: Vec<String> = self.spaces.iter().map(|(n, d)| format!("{}: {d}", q(n))).collect();
        let _ = writeln!(out, "  }},\n  \"spaces\": {{{}}},", spaces.join(", "));
        let _ = writeln!(out, "  \"version\": {FORMAT_VERSION}\n}}");
        out
    }
}

struct Decoder {
    spaces: BTreeMap<String, usize>,
    maps: BTreeMap<String, RawMap>,
    used: BTreeSet<String>,
}

impl Decoder {
    fn space(&self, name: &str) -> Result<Space> {
        self.spaces
            .get(name)
            .map(|&d| Space::new(name, d))
            .ok_or_else(|| Error::Parse(format!("missing space {name:?}")))
    }

    fn raw(&mut self, name: &str, src: &[&str], dst: &str) -> Result<(Vec<Space>, Space, Entries)> {
        let m = self.maps.get(name).ok_or_else(|| Error::Parse(format!("missing map {name:?}")))?;
        if m.src != src || m.dst != dst {
            return Err(Error::Parse(format!(
                "map {name:?} must go from {src:?} to {dst:?}, found {:?} to {:?}",
                m.src, m.dst
            )));
        }
        let entries = m.entries.clone();
        self.used.insert(name.to_string());
        let srcs = src.iter().map(|s| self.space(s)).collect::<Result<Vec<_>>>()?;
        Ok((srcs, self.space(dst)?, entries))
    }

    fn fill(name: &str, dims: &[usize], entries: &[(Vec<usize>, String)], mut set: impl FnMut(&[usize], crate::exactlin::Rational)) -> Result<()> {
        let mut seen = BTreeSet::new();
        for (idx, lit) in entries {
            if idx.len() != dims.len() || idx.iter().zip(dims).any(|(i, d)| i >= d) {
                return Err(Error::Parse(format!("index {idx:?} out of range in map {name:?}")));
            }
            if !seen.insert(idx.clone()) {
                return Err(Error::Parse(format!("duplicate index {idx:?} in map {name:?}")));
            }
            set(idx, parse_rational(lit)?);
        }
        Ok(())
    }

    fn multi(&mut self, name: &str, src: &[&str], dst: &str) -> Result<MultiMap> {
        let (srcs, dst, entries) = self.raw(name, src, dst)?;
        let mut dims = vec![dst.dim];
        dims.extend(srcs.iter().map(|s| s.dim));
        let mut m = MultiMap::zeros(srcs, dst);
        Self::fill(name, &dims, &entries, |idx, c| m.set(idx[0], &idx[1..], c))?;
        Ok(m)
    }

    fn lin(&mut self, name: &str, src: &str, dst: &str) -> Result<Lin> {
        Lin::from_multi(self.multi(name, &[src], dst)?)
    }

    fn vector(&mut self, name: &str, dst: &str) -> Result<Vector> {
        let (_, dst, entries) = self.raw(name, &[], dst)?;
        let mut v = vec![crate::exactlin::zero(); dst.dim];
        Self::fill(name, &[dst.dim], &entries, |idx, c| v[idx[0]] = c)?;
        Ok(v)
    }

    fn finish(&self) -> Result<()> {
        if let Some(extra) = self.maps.keys().find(|k| !self.used.contains(*k)) {
            return Err(Error::Parse(format!("unexpected map {extra:?}")));
        }
        Ok(())
    }
}

fn put_algebra(e: &mut Encoder, p: &str, s: &str, alg: &AssocAlgebra) {
    e.space(s, &alg.space);
    e.multi(&format!("{p}mult"), &alg.mult, &[s, s], s);
}

fn get_algebra(d: &mut Decoder, p: &str, s: &str) -> Result<AssocAlgebra> {
    Ok(AssocAlgebra {
        space: d.space(s)?,
        mult: d.multi(&format!("{p}mult"), &[s, s], s)?,
    })
}

fn put_diff_algebra(e: &mut Encoder, p: &str, s: &str, da: &DifferenceAlgebra) {
    put_algebra(e, p, s, &da.alg);
    e.lin(&format!("{p}d"), &da.d, s, s);
}

fn get_diff_algebra(d: &mut Decoder, p: &str, s: &str) -> Result<DifferenceAlgebra> {
    Ok(DifferenceAlgebra {
        alg: get_algebra(d, p, s)?,
        d: d.lin(&format!("{p}d"), s, s)?,
    })
}

fn put_diff_bimodule(e: &mut Encoder, bm: &DiffBimodule) {
    e.space("M", bm.space());
    e.multi("left", &bm.module.left, &["A", "M"], "M");
    e.multi("right", &bm.module.right, &["M", "A"], "M");
    e.lin("delta", &bm.delta, "M", "M");
}

fn get_diff_bimodule(d: &mut Decoder) -> Result<DiffBimodule> {
    Ok(DiffBimodule {
        module: Bimodule {
            m: d.space("M")?,
            left: d.multi("left", &["A", "M"], "M")?,
            right: d.multi("right", &["M", "A"], "M")?,
        },
        delta: d.lin("delta", "M", "M")?,
    })
}

fn put_ainf2(e: &mut Encoder, p: &str, s0: &str, s1: &str, a: &AInf2) {
    e.space(s0, a.a0());
    e.space(s1, a.a1());
    e.lin(&format!("{p}delta"), a.delta(), s1, s0);
    e.multi(&format!("{p}m00"), &a.m00, &[s0, s0], s0);
    e.multi(&format!("{p}m01"), &a.m01, &[s0, s1], s1);
    e.multi(&format!("{p}m10"), &a.m10, &[s1, s0], s1);
    e.multi(&format!("{p}mu"), &a.mu, &[s0, s0, s0], s1);
}

fn get_ainf2(d: &mut Decoder, p: &str, s0: &str, s1: &str) -> Result<AInf2> {
    Ok(AInf2 {
        cx: TwoTermComplex::new(d.space(s0)?, d.space(s1)?, d.lin(&format!("{p}delta"), s1, s0)?)?,
        m00: d.multi(&format!("{p}m00"), &[s0, s0], s0)?,
        m01: d.multi(&format!("{p}m01"), &[s0, s1], s1)?,
        m10: d.multi(&format!("{p}m10"), &[s1, s0], s1)?,
        mu: d.multi(&format!("{p}mu"), &[s0, s0, s0], s1)?,
    })
}

fn put_diff_ainf(e: &mut Encoder, p: &str, s0: &str, s1: &str, x: &TwoTermDiffAInf) {
    put_ainf2(e, p, s0, s1, &x.ainf);
    e.lin(&format!("{p}d0"), &x.dop.d0, s0, s0);
    e.lin(&format!("{p}d1"), &x.dop.d1, s1, s1);
    e.multi(&format!("{p}d2"), &x.dop.d2, &[s0, s0], s1);
}

fn get_diff_ainf(d: &mut Decoder, p: &str, s0: &str, s1: &str) -> Result<TwoTermDiffAInf> {
    Ok(TwoTermDiffAInf {
        ainf: get_ainf2(d, p, s0, s1)?,
        dop: DiffOp2 {
            d0: d.lin(&format!("{p}d0"), s0, s0)?,
            d1: d.lin(&format!("{p}d1"), s1, s1)?,
            d2: d.multi(&format!("{p}d2"), &[s0, s0], s1)?,
        },
    })
}

const NU: [(&str, [&str; 3]); 3] = [
    ("nu_aav", ["A", "A", "M0"]),
    ("nu_ava", ["A", "M0", "A"]),
    ("nu_vaa", ["M0", "A", "A"]),
];

fn put_hbimod(e: &mut Encoder, hb: &HBimod2) {
    e.space("M0", &hb.m0);
    e.space("M1", &hb.m1);
    e.lin("delta", &hb.delta, "M1", "M0");
    e.multi("left0", &hb.left0, &["A", "M0"], "M0");
    e.multi("right0", &hb.right0, &["M0", "A"], "M0");
    e.multi("left1", &hb.left1, &["A", "M1"], "M1");
    e.multi("right1", &hb.right1, &["M1", "A"], "M1");
    for ((name, src), m) in NU.iter().zip([&hb.nu_aav, &hb.nu_ava, &hb.nu_vaa]) {
        e.multi(name, m, src, "M1");
    }
}

fn get_hbimod(d: &mut Decoder) -> Result<HBimod2> {
    let mut nu = Vec::with_capacity(3);
    for (name, src) in NU {
        nu.push(d.multi(name, &src, "M1")?);
    }
    let [nu_aav, nu_ava, nu_vaa]: [MultiMap; 3] = nu.try_into().expect("three families");
    Ok(HBimod2 {
        m0: d.space("M0")?,
        m1: d.space("M1")?,
        delta: d.lin("delta", "M1", "M0")?,
        left0: d.multi("left0", &["A", "M0"], "M0")?,
        right0: d.multi("right0", &["M0", "A"], "M0")?,
        left1: d.multi("left1", &["A", "M1"], "M1")?,
        right1: d.multi("right1", &["M1", "A"], "M1")?,
        nu_aav,
        nu_ava,
        nu_vaa,
    })
}

fn encode(x: &Structure) -> Encoder {
    let mut e = Encoder::default();
    match x {
        Structure::Algebra(alg) => put_algebra(&mut e, "", "A", alg),
        Structure::DiffAlgebra(da) => put_diff_algebra(&mut e, "", "A", da),
        Structure::DiffBimodule(da, bm) => {
            put_diff_algebra(&mut e, "", "A", da);
            put_diff_bimodule(&mut e, bm);
        }
        Structure::AInf2(a) => put_ainf2(&mut e, "", "A0", "A1", a),
        Structure::DiffAInf2(x) => put_diff_ainf(&mut e, "", "A0", "A1", x),
        Structure::DiffMorphism { src, dst, mor } => {
            put_diff_ainf(&mut e, "src.", "A0", "A1", src);
            put_diff_ainf(&mut e, "dst.", "B0", "B1", dst);
            e.lin("phi0", &mor.base.phi0, "A0", "B0");
            e.lin("phi1", &mor.base.phi1, "A1", "B1");
            e.multi("phi2", &mor.base.phi2, &["A0", "A0"], "B1");
            e.lin("phi3", &mor.phi3, "A0", "B1");
        }
        Structure::Cochain { da, bm, cochain } => {
            put_diff_algebra(&mut e, "", "A", da);
            put_diff_bimodule(&mut e, bm);
            match cochain {
                DiffCochain::Degree0(u) => e.vector("u", u, "M"),
                DiffCochain::Degree1 { f, chi } => {
                    e.multi("f", f, &["A"], "M");
                    e.vector("chi", chi, "M");
                }
                DiffCochain::Higher { f, chi } => {
                    e.multi("f", f, &vec!["A"; f.arity()], "M");
                    e.multi("chi", chi, &vec!["A"; chi.arity()], "M");
                }
            }
        }
        Structure::CrossedModule(cm) => {
            put_diff_algebra(&mut e, "base.", "A", &cm.base);
            put_diff_algebra(&mut e, "top.", "H", &cm.top);
            e.multi("left", &cm.left, &["A", "H"], "H");
            e.multi("right", &cm.right, &["H", "A"], "H");
            e.lin("partial", &cm.partial, "H", "A");
        }
        Structure::HBimod(alg, hb) => {
            put_algebra(&mut e, "", "A", alg);
            put_hbimod(&mut e, hb);
        }
        Structure::DiffHBimod(da, dhb) => {
            put_diff_algebra(&mut e, "", "A", da);
            put_hbimod(&mut e, &dhb.base);
            e.lin("delta0", &dhb.delta0, "M0", "M0");
            e.lin("delta1", &dhb.delta1, "M1", "M1");
            e.multi("theta_am", &dhb.theta_am, &["A", "M0"], "M1");
            e.multi("theta_ma", &dhb.theta_ma, &["M0", "A"], "M1");
        }
        Structure::DiffAss2(x) => {
            e.space("C0", &x.tv.c0);
            e.space("C1", &x.tv.c1);
            e.lin("s", &x.tv.s, "C1", "C0");
            e.lin("t", &x.tv.t, "C1", "C0");
            e.lin("i", &x.tv.i, "C0", "C1");
            e.multi("bullet0", &x.bullet0, &["C0", "C0"], "C0");
            e.multi("bullet1", &x.bullet1, &["C1", "C1"], "C1");
            e.multi("assoc", &x.assoc, &["C0", "C0", "C0"], "C1");
            e.lin("d0", &x.d0, "C0", "C0");
            e.lin("d1", &x.d1, "C1", "C1");
            e.multi("dnat", &x.dnat, &["C0", "C0"], "C1");
        }
    }
    e
}

/// Canonical text: sorted keys, sorted entries, nonzero coefficients only,
/// rationals in lowest terms.
pub fn print(x: &Structure) -> String {
    encode(x).print(x.kind())
}

pub fn parse(text: &str) -> Result<Structure> {
    let raw: RawFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if raw.version != FORMAT_VERSION {
        return Err(Error::Parse(format!("unsupported format version {}", raw.version)));
    }
    let mut d = Decoder {
        spaces: raw.spaces,
        maps: raw.maps,
        used: BTreeSet::new(),
    };
    let out = match raw.kind.as_str() {
        "algebra" => Structure::Algebra(get_algebra(&mut d, "", "A")?),
        "diff_algebra" => Structure::DiffAlgebra(get_diff_algebra(&mut d, "", "A")?),
        "diff_bimodule" => Structure::DiffBimodule(get_diff_algebra(&mut d, "", "A")?, get_diff_bimodule(&mut d)?),
        "ainf2" => Structure::AInf2(get_ainf2(&mut d, "", "A0", "A1")?),
        "diff_ainf2" => Structure::DiffAInf2(get_diff_ainf(&mut d, "", "A0", "A1")?),
        "diff_morphism" => Structure::DiffMorphism {
            src: get_diff_ainf(&mut d, "src.", "A0", "A1")?,
            dst: get_diff_ainf(&mut d, "dst.", "B0", "B1")?,
            mor: DiffAInf2Morphism {
                base: AInf2Morphism {
                    phi0: d.lin("phi0", "A0", "B0")?,
                    phi1: d.lin("phi1", "A1", "B1")?,
                    phi2: d.multi("phi2", &["A0", "A0"], "B1")?,
                },
                phi3: d.lin("phi3", "A0", "B1")?,
            },
        },
        "cochain" => {
            let da = get_diff_algebra(&mut d, "", "A")?;
            let bm = get_diff_bimodule(&mut d)?;
            let cochain = if d.maps.contains_key("u") {
                DiffCochain::Degree0(d.vector("u", "M")?)
            } else {
                let n = d.maps.get("f").map(|m| m.src.len()).ok_or_else(|| Error::Parse("cochain needs \"u\" or \"f\"".into()))?;
                match n {
                    0 => return Err(Error::Parse("\"f\" needs at least one source".into())),
                    1 => DiffCochain::Degree1 {
                        f: d.multi("f", &["A"], "M")?,
                        chi: d.vector("chi", "M")?,
                    },
                    n => DiffCochain::Higher {
                        f: d.multi("f", &vec!["A"; n], "M")?,
                        chi: d.multi("chi", &vec!["A"; n - 1], "M")?,
                    },
                }
            };
            Structure::Cochain { da, bm, cochain }
        }
        "crossed_module" => Structure::CrossedModule(CrossedModule {
            base: get_diff_algebra(&mut d, "base.", "A")?,
            top: get_diff_algebra(&mut d, "top.", "H")?,
            left: d.multi("left", &["A", "H"], "H")?,
            right: d.multi("right", &["H", "A"], "H")?,
            partial: d.lin("partial", "H", "A")?,
        }),
        "hbimod" => Structure::HBimod(get_algebra(&mut d, "", "A")?, get_hbimod(&mut d)?),
        "diff_hbimod" => {
            let da = get_diff_algebra(&mut d, "", "A")?;
            let base = get_hbimod(&mut d)?;
            Structure::DiffHBimod(
                da,
                DiffHBimod2 {
                    base,
                    delta0: d.lin("delta0", "M0", "M0")?,
                    delta1: d.lin("delta1", "M1", "M1")?,
                    theta_am: d.multi("theta_am", &["A", "M0"], "M1")?,
                    theta_ma: d.multi("theta_ma", &["M0", "A"], "M1")?,
                },
            )
        }
        "diffass2" => Structure::DiffAss2(DiffAss2 {
            tv: TwoVec {
                c0: d.space("C0")?,
                c1: d.space("C1")?,
                s: d.lin("s", "C1", "C0")?,
                t: d.lin("t", "C1", "C0")?,
                i: d.lin("i", "C0", "C1")?,
            },
            bullet0: d.multi("bullet0", &["C0", "C0"], "C0")?,
            bullet1: d.multi("bullet1", &["C1", "C1"], "C1")?,
            assoc: d.multi("assoc", &["C0", "C0", "C0"], "C1")?,
            d0: d.lin("d0", "C0", "C0")?,
            d1: d.lin("d1", "C1", "C1")?,
            dnat: d.multi("dnat", &["C0", "C0"], "C1")?,
        }),
        other => return Err(Error::Parse(format!("unknown kind {other:?}"))),
    };
    d.finish()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohom::CochainComplex;
    use crate::exactlin::frac;
    use crate::genkit::{catalog, gen};

    fn corpus() -> Vec<Structure> {
        let m2 = catalog::matrix_algebra();
        let da = DifferenceAlgebra { d: catalog::gen_difference_ops(&m2)[2].clone(), alg: m2.clone() };
        let bm = DiffBimodule::regular(&da);
        let x = gen::gen_skeletal(&da, &bm, 4).unwrap();
        let (y, mor) = gen::gen_morphism(&x, 5).unwrap();
        let cx = CochainComplex::new(da.clone(), bm.clone()).unwrap();
        let (dda, dhb) = gen::gen_diff_hbimods().swap_remove(7);
        let mut out = vec![
            Structure::Algebra(m2.clone()),
            Structure::DiffAlgebra(da.clone()),
            Structure::DiffBimodule(da.clone(), bm.clone()),
            Structure::AInf2(y.ainf.clone()),
            Structure::DiffAInf2(y.clone()),
            Structure::DiffMorphism { src: x.clone(), dst: y, mor },
            Structure::CrossedModule(gen::ideal_crossed_module()),
            Structure::HBimod(dda.alg.clone(), dhb.base.clone()),
            Structure::DiffHBimod(dda.clone(), dhb.clone()),
            Structure::DiffAss2(crate::twoalg::functor_t(&x).unwrap()),
        ];
        for degree in 0..=3 {
            out.push(Structure::Cochain { da: da.clone(), bm: bm.clone(), cochain: gen::random_cochain(&cx, degree, 9) });
        }
        out
    }

    #[test]
    fn round_trips_are_exact_and_byte_identical() {
        for s in corpus() {
            let text = print(&s);
            let back = parse(&text).unwrap();
            assert_eq!(back, s, "{}", s.kind());
            assert_eq!(print(&back), text);
        }
    }

    #[test]
    fn rational_literals_are_canonical() {
        let q = catalog::rationals();
        let mut alg = q.clone();
        alg.mult.set(0, &[0, 0], frac(-6, 4));
        let text = print(&Structure::Algebra(alg));
        assert!(text.contains("\"-3/2\""));
        let edited = text.replace("\"-3/2\"", "\"6/-4\"");
        assert_eq!(print(&parse(&edited).unwrap()), text);
    }

    #[test]
    fn malformed_files_are_parse_errors() {
        let text = print(&Structure::Algebra(catalog::dual_numbers()));
        let cases = [
            text.replace("\"1\"", "\"1/0\""),
            text.replace("\"version\": 1", "\"version\": 2"),
            text.replace("\"algebra\"", "\"monoid\""),
            text.replace("[[0, 0, 0]", "[[0, 0, 5]"),
            text.replace("\"mult\"", "\"mul\""),
            text.replace("[[0, 0, 0], \"1\"]", "[[0, 0, 0], \"1\"], [[0, 0, 0], \"2\"]"),
            "{".to_string(),
        ];
        for bad in cases {
            assert!(matches!(parse(&bad), Err(Error::Parse(_))), "{bad}");
        }
    }
}
