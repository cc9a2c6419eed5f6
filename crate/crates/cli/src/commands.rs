//! One function per subcommand, each producing a JSON payload.

use std::sync::Arc;
use std::time::Instant;

use hkr_core::charmap::{self, CharacterTable, ClassFunction};
use hkr_core::commuting::{self, TupleClass};
use hkr_core::fgl::text::{multi_to_text, series_to_text};
use hkr_core::fgl::{self, FglName};
use hkr_core::group::{named_group_capped, parse_group_expr, Elem, GroupExpr};
use hkr_core::inertia::{self, GSet};
use hkr_core::levelrings;
use hkr_core::ring::{Integers, ModularIntegers, Rationals, Ring};
use hkr_core::{arith, selftest, FiniteGroup, HkrError};
use serde_json::{json, Value};

use crate::args::{
    AdamsArgs, CharmapArgs, Command, FglCommand, FixCommand, GSetArgs, LawArgs, PowerOpArgs, PsiLevelArgs,
    SelftestArgs,
};
use crate::cache::{cache_key, Cache};
use crate::config::Config;
use crate::error::CliError;

/// Largest truncation chosen automatically for Weierstrass degrees.
const AUTO_TRUNCATION_CAP: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    Miss,
    Off,
}

impl CacheStatus {
    fn as_str(self) -> &'static str {
        match self {
            CacheStatus::Hit => "hit",
            CacheStatus::Miss => "miss",
            CacheStatus::Off => "off",
        }
    }
}

pub struct Report {
    pub payload: Value,
    /// Header and rows for `--format csv`, when the command has a table.
    pub csv: Option<(Vec<&'static str>, Vec<Value>)>,
    pub cache: CacheStatus,
    /// Overall verdict for commands that check something.
    pub passed: bool,
    /// Replaces the generic plain-text rendering.
    pub plain: Option<String>,
}

impl Report {
    fn new(payload: Value) -> Self {
        Self {
            payload,
            csv: None,
            cache: CacheStatus::Off,
            passed: true,
            plain: None,
        }
    }

    /// Timing and cache fields, added only under `--verbose`.
    pub fn add_verbose(&mut self, seconds: f64) {
        if let Value::Object(map) = &mut self.payload {
            map.insert(
                "verbose".into(),
                json!({"elapsed_seconds": seconds, "cache": self.cache.as_str()}),
            );
        }
    }
}

fn canonical_spec(spec: &str) -> Result<String, CliError> {
    Ok(parse_group_expr(spec)?.canonical())
}

fn build_group(spec: &str, cfg: &Config) -> Result<Arc<FiniteGroup>, CliError> {
    Ok(Arc::new(named_group_capped(spec, cfg.order_cap)?))
}

/// The least `k` with every `p`-element order dividing `p^k`, at least 1.
fn minimal_level(group: &FiniteGroup, p: u64) -> u32 {
    arith::p_power_exponent(arith::p_part(group.exponent(), p), p)
        .unwrap_or(0)
        .max(1)
}

fn cached(
    cfg: &Config,
    cache: &mut Option<Cache>,
    key: String,
    compute: impl FnOnce() -> Result<Value, CliError>,
) -> Result<(Value, CacheStatus), CliError> {
    let Some(c) = cache.as_mut() else {
        return Ok((compute()?, CacheStatus::Off));
    };
    if let Some(v) = c.get(&key) {
        return Ok((v.clone(), CacheStatus::Hit));
    }
    let v = compute()?;
    if let Err(e) = c.put(&key, v.clone()) {
        if cfg.verbose {
            eprintln!("warning: could not write cache: {e}");
        }
    }
    Ok((v, CacheStatus::Miss))
}

pub fn execute(cmd: &Command, cfg: &Config, cache: &mut Option<Cache>) -> Result<Report, CliError> {
    let start = Instant::now();
    let mut report = match cmd {
        Command::Selftest(a) => selftest_report(a, cfg)?,
        Command::Fix { command } => fix(command, cfg, cache)?,
        other => {
            let (kind, params) = request(other)?;
            let key = cache_key(kind, &params);
            let (payload, status) = cached(cfg, cache, key, || compute(other, cfg))?;
            let mut r = Report::new(payload);
            r.cache = status;
            if let Command::Rank(_) = other {
                r.csv = r.payload["table"].as_array().map(|rows| {
                    let rows = rows
                        .iter()
                        .map(|row| {
                            json!({
                                "group": r.payload["group"],
                                "p": r.payload["p"],
                                "n": row["n"],
                                "rank": row["rank"],
                            })
                        })
                        .collect();
                    (vec!["group", "p", "n", "rank"], rows)
                });
            }
            r
        }
    };
    if cfg.verbose {
        report.add_verbose(start.elapsed().as_secs_f64());
    }
    Ok(report)
}

type Request = (&'static str, Vec<(&'static str, String)>);

/// Cache kind and canonical parameters of a cacheable command.
fn request(cmd: &Command) -> Result<Request, CliError> {
    let s = |x: &dyn ToString| x.to_string();
    let opt = |x: Option<String>| x.unwrap_or_else(|| "auto".into());
    Ok(match cmd {
        Command::Rank(a) => {
            let ns: Vec<String> = a.n.iter().map(|n| n.to_string()).collect();
            (
                "rank",
                vec![
                    ("group", canonical_spec(&a.group)?),
                    ("p", s(&a.p)),
                    ("n", ns.join(",")),
                ],
            )
        }
        Command::Tuples(a) => (
            "tuples",
            vec![
                ("group", canonical_spec(&a.group)?),
                ("p", s(&a.p)),
                ("n", s(&a.n)),
            ],
        ),
        Command::GlOrbits(a) => (
            "gl-orbits",
            vec![
                ("group", canonical_spec(&a.group)?),
                ("p", s(&a.p)),
                ("n", s(&a.n)),
                ("k", opt(a.k.map(|k| k.to_string()))),
            ],
        ),
        Command::ZpnSets(a) => ("zpn-sets", vec![("p", s(&a.p)), ("n", s(&a.n)), ("k", s(&a.k))]),
        Command::Subgroups(a) => ("subgroups", vec![("p", s(&a.p)), ("n", s(&a.n)), ("k", s(&a.k))]),
        Command::Fgl { command } => match command {
            FglCommand::Law(l) => ("fgl-law", law_params(l)),
            FglCommand::MSeries { law, m } => {
                let mut p = law_params(law);
                p.push(("m", s(m)));
                ("fgl-m-series", p)
            }
            FglCommand::Angle { law, p, k } => {
                let mut params = law_params(law);
                params.extend([("p", s(p)), ("k", s(k))]);
                ("fgl-angle", params)
            }
            FglCommand::Weierstrass { law, p, k, degree } => (
                "fgl-weierstrass",
                vec![
                    ("law", law.trim().to_string()),
                    ("p", s(p)),
                    ("k", s(k)),
                    ("D", opt(degree.map(|d| d.to_string()))),
                ],
            ),
            FglCommand::Coprime { p, i, j } => ("fgl-coprime", vec![("p", s(p)), ("i", s(i)), ("j", s(j))]),
        },
        Command::C0Demo(a) => ("c0-demo", vec![("p", s(&a.p)), ("k", s(&a.k))]),
        Command::Chartable(a) => ("chartable", vec![("group", canonical_spec(&a.group)?)]),
        Command::Charmap(a) => (
            "charmap",
            vec![
                ("group", canonical_spec(&a.group)?),
                ("p", s(&a.p)),
                ("chi", opt(a.chi.map(|c| c.to_string()))),
            ],
        ),
        Command::Adams(a) => (
            "adams",
            vec![
                ("group", canonical_spec(&a.group)?),
                ("m", s(&a.m)),
                ("chi", opt(a.chi.map(|c| c.to_string()))),
            ],
        ),
        Command::PowerOp(a) => (
            "power-op",
            vec![
                ("group", canonical_spec(&a.group)?),
                ("k", s(&a.k)),
                ("chi", s(&a.chi)),
            ],
        ),
        Command::PsiLevel(a) => (
            "psi-level",
            vec![
                ("group", canonical_spec(&a.group)?),
                ("p", s(&a.p)),
                ("k", s(&a.k)),
                ("chi", opt(a.chi.map(|c| c.to_string()))),
            ],
        ),
        Command::GaloisDim(a) => (
            "galois-dim",
            vec![
                ("group", canonical_spec(&a.group)?),
                ("p", s(&a.p)),
                ("k", opt(a.k.map(|k| k.to_string()))),
            ],
        ),
        Command::Fix { .. } | Command::Selftest(_) => unreachable!("handled separately"),
    })
}

fn law_params(l: &LawArgs) -> Vec<(&'static str, String)> {
    vec![
        ("law", l.law.trim().to_string()),
        ("ring", l.ring.trim().to_string()),
        ("D", l.degree.map_or_else(|| "auto".into(), |d| d.to_string())),
    ]
}

fn compute(cmd: &Command, cfg: &Config) -> Result<Value, CliError> {
    match cmd {
        Command::Rank(a) => {
            let g = build_group(&a.group, cfg)?;
            let mut table = Vec::new();
            for &n in &a.n {
                let rank = commuting::tuple_classes_capped(&g, a.p, n, cfg.tuple_work_cap)?.len();
                table.push(json!({"n": n, "rank": rank}));
            }
            Ok(json!({"group": group_name(&g), "order": g.order(), "p": a.p, "table": table}))
        }
        Command::Tuples(a) => {
            let g = build_group(&a.group, cfg)?;
            let classes = commuting::tuple_classes_capped(&g, a.p, a.n, cfg.tuple_work_cap)?;
            let hom_count: usize = classes.iter().map(|c| c.size).sum();
            Ok(json!({
                "group": group_name(&g),
                "p": a.p,
                "n": a.n,
                "hom_count": hom_count,
                "class_count": classes.len(),
                "classes": classes.iter().map(|c| class_json(&g, c)).collect::<Vec<_>>(),
            }))
        }
        Command::GlOrbits(a) => {
            let g = build_group(&a.group, cfg)?;
            let k = a.k.unwrap_or_else(|| minimal_level(&g, a.p));
            let (classes, orbits) = commuting::gl_action_orbits(&g, a.p, a.n, k)?;
            Ok(json!({
                "group": group_name(&g),
                "p": a.p,
                "n": a.n,
                "k": k,
                "classes": classes.iter().map(|c| c.representative.cycle_notation(&g)).collect::<Vec<_>>(),
                "orbits": orbits,
                "orbit_count": orbits.len(),
            }))
        }
        Command::ZpnSets(a) => Ok(json!({
            "p": a.p, "n": a.n, "k": a.k,
            "count": commuting::zpn_set_count(a.p, a.n, a.k)?,
        })),
        Command::Subgroups(a) => Ok(json!({
            "p": a.p, "n": a.n, "k": a.k,
            "count": commuting::subgroup_count(a.p, a.n, a.k)?,
        })),
        Command::Fgl { command } => fgl_command(command, cfg),
        Command::C0Demo(a) => c0_demo(a.p, a.k),
        Command::Chartable(a) => {
            let g = build_group(&a.group, cfg)?;
            let t = charmap::character_table(&g)?;
            let mut v = t.to_json();
            v["degrees"] = json!(t.degrees());
            v["formatted"] = json!(t
                .irreducibles()
                .iter()
                .map(|c| c.format_values())
                .collect::<Vec<_>>());
            Ok(v)
        }
        Command::Charmap(a) => charmap_command(a, cfg),
        Command::Adams(a) => adams_command(a, cfg),
        Command::PowerOp(a) => power_op(a, cfg),
        Command::PsiLevel(a) => psi_level(a, cfg),
        Command::GaloisDim(a) => {
            let g = build_group(&a.group, cfg)?;
            let k = a.k.unwrap_or_else(|| minimal_level(&g, a.p));
            let t = charmap::character_table(&g)?;
            Ok(json!({
                "group": group_name(&g),
                "p": a.p,
                "k": k,
                "dimension": charmap::galois_fixed_dim(&t, a.p, k)?,
                "p_power_classes": charmap::p_power_classes(&t, a.p).len(),
            }))
        }
        Command::Fix { .. } | Command::Selftest(_) => unreachable!("handled separately"),
    }
}

fn group_name(g: &FiniteGroup) -> String {
    g.name().unwrap_or("?").to_string()
}

fn class_json(g: &FiniteGroup, c: &TupleClass) -> Value {
    json!({
        "representative": c.representative.cycle_notation(g),
        "size": c.size,
        "image_centralizer_order": c.image_centralizer_order,
    })
}

enum RingChoice {
    Q,
    Z,
    Mod(u64, u32),
}

fn parse_ring(s: &str) -> Result<RingChoice, CliError> {
    let t = s.trim();
    match t {
        "Q" | "q" => return Ok(RingChoice::Q),
        "Z" | "z" => return Ok(RingChoice::Z),
        _ => {}
    }
    let bad = || CliError::Usage(format!("unknown ring `{t}`; expected Q, Z or mod(p,e)"));
    let inner = t
        .strip_prefix("mod(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(bad)?;
    let (p, e) = inner.split_once(',').ok_or_else(bad)?;
    let p: u64 = p.trim().parse().map_err(|_| bad())?;
    let e: u32 = e.trim().parse().map_err(|_| bad())?;
    if !arith::is_prime(p) || e == 0 || arith::checked_pow(p, e).is_none_or(|m| m > 1 << 31) {
        return Err(bad());
    }
    Ok(RingChoice::Mod(p, e))
}

enum LawAction {
    Law,
    MSeries(i64),
    Angle(u64, u32),
}

fn fgl_command(cmd: &FglCommand, cfg: &Config) -> Result<Value, CliError> {
    let (args, action) = match cmd {
        FglCommand::Law(l) => (l, LawAction::Law),
        FglCommand::MSeries { law, m } => (law, LawAction::MSeries(*m)),
        FglCommand::Angle { law, p, k } => (law, LawAction::Angle(*p, *k)),
        FglCommand::Weierstrass { law, p, k, degree } => return weierstrass(law, *p, *k, *degree, cfg),
        FglCommand::Coprime { p, i, j } => {
            let mut v = fgl::coprimality_check(*p, *i, *j)?.to_json();
            v["verified"] = json!(fgl::coprimality_check(*p, *i, *j)?.verify());
            return Ok(v);
        }
    };
    let name = FglName::parse(&args.law)?;
    let d = args.degree.unwrap_or(cfg.truncation_default);
    match parse_ring(&args.ring)? {
        RingChoice::Q => law_payload(Rationals, "Q".into(), &name, d, &action),
        RingChoice::Z => law_payload(Integers, "Z".into(), &name, d, &action),
        RingChoice::Mod(p, e) => law_payload(
            ModularIntegers::new(p, e),
            format!("mod({p},{e})"),
            &name,
            d,
            &action,
        ),
    }
}

fn law_payload<R: Ring>(
    ring: R,
    label: String,
    name: &FglName,
    d: usize,
    action: &LawAction,
) -> Result<Value, CliError> {
    let law = fgl::make_fgl(name, ring, d)?;
    let mut v = json!({"law": name.to_string(), "ring": label, "D": d});
    match *action {
        LawAction::Law => {
            law.check_axioms()?;
            v["series"] = json!(multi_to_text(law.series(), &["x", "y"]));
            v["axioms"] = json!(true);
        }
        LawAction::MSeries(m) => {
            v["m"] = json!(m);
            v["series"] = json!(series_to_text(&law.m_series(m)?, "x"));
        }
        LawAction::Angle(p, k) => {
            if !arith::is_prime(p) {
                return Err(CliError::Usage(format!("{p} is not prime")));
            }
            let factors = (1..=k)
                .map(|i| Ok(json!({"i": i, "series": series_to_text(&law.angle_series(p, i)?, "x")})))
                .collect::<Result<Vec<_>, HkrError>>()?;
            let full = arith::checked_pow(p, k)
                .and_then(|v| i64::try_from(v).ok())
                .ok_or_else(|| CliError::Usage(format!("{p}^{k} overflows")))?;
            v["p"] = json!(p);
            v["k"] = json!(k);
            v["factors"] = json!(factors);
            v["p_power_series"] = json!(series_to_text(&law.m_series(full)?, "x"));
        }
    }
    Ok(v)
}

fn weierstrass(law: &str, p: u64, k: u32, degree: Option<usize>, cfg: &Config) -> Result<Value, CliError> {
    let name = FglName::parse(law)?;
    if !arith::is_prime(p) {
        return Err(CliError::Usage(format!("{p} is not prime")));
    }
    let height = match &name {
        FglName::Honda { n, .. } => *n,
        _ => 1,
    };
    let expected = arith::checked_pow(p, k * height).map(|v| v as usize);
    let d = match degree {
        Some(d) => d,
        None => expected
            .filter(|&e| e <= AUTO_TRUNCATION_CAP)
            .map_or(cfg.truncation_default, |e| e.max(cfg.truncation_default)),
    };
    let ring = ModularIntegers::new(p, 2);
    let f = fgl::make_fgl(&name, ring, d)?;
    let pk = arith::checked_pow(p, k)
        .and_then(|v| i64::try_from(v).ok())
        .ok_or_else(|| CliError::Usage(format!("{p}^{k} overflows")))?;
    let series = f.m_series(pk)?;
    Ok(json!({
        "law": name.to_string(),
        "ring": format!("mod({p},2)"),
        "D": d,
        "p": p,
        "k": k,
        "series": series_to_text(&series, "x"),
        "weierstrass_degree": fgl::weierstrass_degree(&series).to_string(),
    }))
}

fn c0_demo(p: u64, k: u32) -> Result<Value, CliError> {
    let ring = levelrings::cpk_ring(p, k)?;
    let pk = arith::checked_pow(p, k).unwrap_or(u64::MAX);
    let small = pk <= levelrings::VANDERMONDE_CAP;
    let z_image = if small {
        json!(levelrings::z_image(&ring)?
            .iter()
            .map(|a| a.to_text())
            .collect::<Vec<_>>())
    } else {
        Value::Null
    };
    let vandermonde = if small {
        serde_json::to_value(levelrings::vandermonde_det(p, k)?.1).expect("serializable")
    } else {
        Value::Null
    };
    let fixed = if small {
        json!(levelrings::galois_fixed_subring_dim(&ring)?)
    } else {
        Value::Null
    };
    let dk = levelrings::drinfeld_dk(p, k)?;
    Ok(json!({
        "p": p,
        "k": k,
        "ring": {
            "modulus": ring.modulus().to_text("x"),
            "dimension": ring.dimension(),
            "crt_factors": ring.crt_factors().iter().map(|f| f.to_text("x")).collect::<Vec<_>>(),
        },
        "z_image": z_image,
        "vandermonde": vandermonde,
        "localization": serde_json::to_value(levelrings::localize_c0k(p, k)?).expect("serializable"),
        "drinfeld": {"modulus": dk.modulus().to_text("x"), "dimension": dk.dimension(), "integral": dk.is_integral()},
        "galois_fixed_dim": fixed,
    }))
}

fn table_for(spec: &str, cfg: &Config) -> Result<(Arc<FiniteGroup>, CharacterTable), CliError> {
    let g = build_group(spec, cfg)?;
    let t = charmap::character_table_arc(g.clone())?;
    Ok((g, t))
}

fn selected(t: &CharacterTable, chi: Option<usize>) -> Result<Vec<(usize, &ClassFunction)>, CliError> {
    let irr = t.irreducibles();
    match chi {
        None => Ok(irr.iter().enumerate().collect()),
        Some(i) if i < irr.len() => Ok(vec![(i, &irr[i])]),
        Some(i) => Err(CliError::Usage(format!(
            "--chi {i} out of range; the table has {} irreducibles",
            irr.len()
        ))),
    }
}

fn class_reps(g: &FiniteGroup, classes: &[usize]) -> Vec<String> {
    let all = g.conjugacy_classes();
    classes
        .iter()
        .map(|&c| g.element(all[c].representative).cycle_notation())
        .collect()
}

fn charmap_command(a: &CharmapArgs, cfg: &Config) -> Result<Value, CliError> {
    let (g, t) = table_for(&a.group, cfg)?;
    let classes = charmap::p_power_classes(&t, a.p);
    let mut rows = Vec::new();
    let mut conductor = 1;
    for (i, chi) in selected(&t, a.chi)? {
        let image = charmap::character_map(&t, a.p, chi)?;
        conductor = image.field().conductor();
        rows.push(json!({"index": i, "values": image.format_values()}));
    }
    Ok(json!({
        "group": group_name(&g),
        "p": a.p,
        "classes": class_reps(&g, &classes),
        "conductor": conductor,
        "characters": rows,
        "rank": charmap::char_matrix_rank(&t, a.p)?,
    }))
}

fn adams_command(a: &AdamsArgs, cfg: &Config) -> Result<Value, CliError> {
    let (g, t) = table_for(&a.group, cfg)?;
    let all: Vec<usize> = (0..g.conjugacy_classes().len()).collect();
    let mut rows = Vec::new();
    for (i, chi) in selected(&t, a.chi)? {
        let image = charmap::adams_psi(&t, a.m, chi)?;
        rows.push(json!({
            "index": i,
            "values": image.format_values(),
            "decomposition": charmap::decompose(&t, &image)?.iter().map(|c| t.field().format_with(c, "z")).collect::<Vec<_>>(),
        }));
    }
    Ok(json!({
        "group": group_name(&g),
        "m": a.m,
        "classes": class_reps(&g, &all),
        "conductor": t.conductor(),
        "characters": rows,
    }))
}

fn power_op(a: &PowerOpArgs, cfg: &Config) -> Result<Value, CliError> {
    let (g, t) = table_for(&a.group, cfg)?;
    let (_, chi) = selected(&t, Some(a.chi))?[0];
    let all: Vec<usize> = (0..g.conjugacy_classes().len()).collect();
    let power = charmap::total_power(&t, a.k, chi)?;
    let rows: Vec<Value> = power
        .partitions
        .iter()
        .zip(&power.values)
        .map(|(parts, vals)| {
            json!({
                "cycle_type": parts,
                "values": vals.iter().map(|v| t.field().format_with(v, "z")).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(json!({
        "group": group_name(&g),
        "k": a.k,
        "chi": a.chi,
        "classes": class_reps(&g, &all),
        "conductor": t.conductor(),
        "rows": rows,
    }))
}

fn psi_level(a: &PsiLevelArgs, cfg: &Config) -> Result<Value, CliError> {
    let (g, t) = table_for(&a.group, cfg)?;
    let all: Vec<usize> = (0..g.conjugacy_classes().len()).collect();
    let pk = arith::checked_pow(a.p, a.k)
        .and_then(|v| i64::try_from(v).ok())
        .ok_or_else(|| CliError::Usage(format!("{}^{} overflows", a.p, a.k)))?;
    let mut rows = Vec::new();
    for (i, chi) in selected(&t, a.chi)? {
        let level = charmap::psi_level(&t, a.p, a.k, chi)?;
        let adams = charmap::adams_psi(&t, pk, chi)?;
        rows.push(json!({"index": i, "values": level.format_values(), "equals_adams": level == adams}));
    }
    Ok(json!({
        "group": group_name(&g),
        "p": a.p,
        "k": a.k,
        "classes": class_reps(&g, &all),
        "conductor": t.conductor(),
        "characters": rows,
    }))
}

fn load_gset(x: &GSetArgs, cfg: &Config) -> Result<GSet, CliError> {
    if let Some(path) = &x.gset {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        return Ok(GSet::from_json(&text)?);
    }
    let spec = x.group.as_deref().expect("clap requires --group without --gset");
    let g = build_group(spec, cfg)?;
    if x.regular {
        return Ok(GSet::regular(g)?);
    }
    let Some(gens) = &x.cosets else {
        return Ok(GSet::point(g));
    };
    let subgroup = if gens.trim().is_empty() {
        Vec::new()
    } else {
        let expr = parse_group_expr(&format!("Perm({}; {gens})", g.degree()))?;
        let GroupExpr::Perm { generators, .. } = expr else {
            unreachable!("parsed as a permutation group")
        };
        generators
            .iter()
            .map(|perm| {
                g.index_of(perm).ok_or_else(|| {
                    CliError::Usage(format!(
                        "{} is not an element of {}",
                        perm.cycle_notation(),
                        group_name(&g)
                    ))
                })
            })
            .collect::<Result<Vec<Elem>, CliError>>()?
    };
    Ok(GSet::cosets(g, &subgroup)?)
}

fn fix(cmd: &FixCommand, cfg: &Config, cache: &mut Option<Cache>) -> Result<Report, CliError> {
    let (kind, x, p, n) = match cmd {
        FixCommand::LoopsCheck { group, n } => {
            let key = cache_key(
                "fix-loops-check",
                &[("group", canonical_spec(group)?), ("n", n.to_string())],
            );
            let (payload, status) = cached(cfg, cache, key, || {
                let g = build_group(group, cfg)?;
                let r = inertia::loops_pgroup_check(&g, *n)?;
                let mut v = serde_json::to_value(&r).expect("serializable");
                v["group"] = json!(group_name(&g));
                Ok(v)
            })?;
            let passed = payload["holds"].as_bool().unwrap_or(false);
            return Ok(Report {
                payload,
                csv: None,
                cache: status,
                passed,
                plain: None,
            });
        }
        FixCommand::Points { x, p, n } => ("fix-points", x, *p, *n),
        FixCommand::Census { x, p, n } => ("fix-census", x, *p, *n),
        FixCommand::IterateCheck { x, p, n } => ("fix-iterate-check", x, *p, *n),
    };
    let set = load_gset(x, cfg)?;
    let key = cache_key(
        kind,
        &[
            ("gset", set.to_json().to_string()),
            ("p", p.to_string()),
            ("n", n.to_string()),
        ],
    );
    let (payload, status) = cached(cfg, cache, key, || {
        let g = set.group();
        let mut v = match cmd {
            FixCommand::Points { .. } => {
                let f = inertia::fix_n(&set, p, n)?;
                json!({"count": f.len(), "points": f.gset().labels()})
            }
            FixCommand::Census { .. } => {
                let census = inertia::orbit_census(&set, p, n)?;
                let prediction = inertia::orbit_sum_prediction(&set, p, n)?;
                json!({
                    "count": census.count(),
                    "prediction": prediction,
                    "consistent": census.count() == prediction,
                    "orbits": census.orbits,
                })
            }
            FixCommand::IterateCheck { .. } => {
                let check = inertia::iterate_fix_check(&set, p, n)?;
                json!({"holds": check.holds, "size": check.bijection.len()})
            }
            FixCommand::LoopsCheck { .. } => unreachable!(),
        };
        v["group"] = json!(group_name(g));
        v["gset_size"] = json!(set.len());
        v["p"] = json!(p);
        v["n"] = json!(n);
        Ok(v)
    })?;
    let passed = match cmd {
        FixCommand::Census { .. } => payload["consistent"].as_bool().unwrap_or(false),
        FixCommand::IterateCheck { .. } => payload["holds"].as_bool().unwrap_or(false),
        _ => true,
    };
    Ok(Report {
        payload,
        csv: None,
        cache: status,
        passed,
        plain: None,
    })
}

fn selftest_report(a: &SelftestArgs, cfg: &Config) -> Result<Report, CliError> {
    let outcomes = match a.criterion {
        Some(id) => vec![selftest::run_criterion(id).ok_or_else(|| {
            CliError::Usage(format!(
                "no criterion {id}; valid ids are 1-{}",
                selftest::criteria().len()
            ))
        })?],
        None => selftest::run_all(),
    };
    let verdict = |ok: bool| if ok { "PASS" } else { "FAIL" };
    let mut lines = String::new();
    let mut rows = Vec::new();
    for o in &outcomes {
        lines.push_str(&format!(
            "{}  {:>2} {}: {}",
            verdict(o.passed),
            o.id,
            o.title,
            o.detail
        ));
        if cfg.verbose {
            lines.push_str(&format!(" ({:.2} s)", o.seconds));
        }
        lines.push('\n');
        let mut row = json!({"id": o.id, "title": o.title, "passed": o.passed, "detail": o.detail});
        if cfg.verbose {
            row["seconds"] = json!(o.seconds);
        }
        rows.push(row);
    }
    let transparency = if a.criterion.is_none() {
        Some(cache_transparency(cfg))
    } else {
        None
    };
    let mut passed = outcomes.iter().all(|o| o.passed);
    let mut payload = json!({"criteria": rows});
    if let Some((ok, detail)) = transparency {
        passed &= ok;
        lines.push_str(&format!("{}   - cache transparency: {detail}\n", verdict(ok)));
        payload["cache_transparency"] = json!({"passed": ok, "detail": detail});
    }
    payload["passed"] = json!(passed);
    Ok(Report {
        payload,
        csv: None,
        cache: CacheStatus::Off,
        passed,
        plain: Some(lines),
    })
}

/// Runs a few requests without a cache, then twice through a fresh cache
/// file, and compares the serialized payloads byte for byte.
fn cache_transparency(cfg: &Config) -> (bool, String) {
    use clap::Parser;
    let requests = [
        "hkr rank --group Cyc(4) --p 2 --n 1,2",
        "hkr subgroups --p 2 --n 2 --k 2",
        "hkr chartable --group Sym(3)",
        "hkr fgl law --law multiplicative --D 6",
        "hkr tuples --group Dih(4) --p 2 --n 2",
    ];
    let path = std::env::temp_dir().join(format!("hkr-selftest-{}.json", std::process::id()));
    let _ = std::fs::remove_file(&path);
    let plain = Config {
        cache_path: None,
        verbose: false,
        ..cfg.clone()
    };
    let mut failures = Vec::new();
    for line in requests {
        let cli = crate::args::Cli::try_parse_from(line.split(' ')).expect("valid request");
        let run = |cache: &mut Option<Cache>| {
            execute(&cli.command, &plain, cache).map(|r| (crate::render::json(&r.payload), r.cache))
        };
        let fresh = run(&mut None);
        let miss = run(&mut Some(Cache::open(&path)));
        let hit = run(&mut Some(Cache::open(&path)));
        match (fresh, miss, hit) {
            (Ok((a, _)), Ok((b, CacheStatus::Miss)), Ok((c, CacheStatus::Hit))) if a == b && b == c => {}
            _ => failures.push(line.trim_start_matches("hkr ").to_string()),
        }
    }
    let _ = std::fs::remove_file(&path);
    if failures.is_empty() {
        (
            true,
            format!("{} requests identical with and without the cache", requests.len()),
        )
    } else {
        (
            false,
            format!("cache changed the payload of: {}", failures.join("; ")),
        )
    }
}
