//! Command implementations. Each returns a report or a [`CliError`].

use std::io::Read as _;
use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};
use tropical_groups::random::{random_hclass_element, random_point_in_span, random_vector};
use tropical_groups::{
    affine_form, check_idempotent, classify_point, common_eigenvector_of, decompose_unit, eigenspace_basis,
    embed_full_rank, extremal_columns, factor_hclass_element, full_rank_reduce, gamma, green_relation, group_structure,
    idempotent_profile, in_span, is_idempotent, is_multiple, kleene_plus, kleene_star, lift_hclass_element,
    projectivize, reduce_hclass_element, residual_solve, sigma_group_capped, span_equal, zero_diag_normalize,
    zero_diag_representative, Error, GreenRelation, GroupDecomposition, IdempotentProfile, MonomialUnit, TropMatrix,
    TropVector,
};

use crate::format::{self, canonical_text, parse_matrix, parse_vector};
use crate::report::{InputDigest, Report};
use crate::{Cli, CliError, Command, Relation};

type Outcome<T> = std::result::Result<T, CliError>;

struct Ctx {
    digest: InputDigest,
    checks: Vec<String>,
    rng: Option<ChaCha8Rng>,
    max_n: usize,
}

impl Ctx {
    fn check(&mut self, name: &str) {
        self.checks.push(name.to_string());
    }

    /// Records a check that must hold; a failure is a bug, reported as exit 1.
    fn ensure(&mut self, name: &str, ok: bool) -> Outcome<()> {
        if !ok {
            return Err(CliError::Domain(format!("internal check failed: {name}")));
        }
        self.check(name);
        Ok(())
    }

    fn matrix(&mut self, label: &str, path: &Path) -> Outcome<TropMatrix> {
        let text = read_input(path)?;
        let m = parse_matrix(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        self.digest.add(label, &canonical_text(&m));
        Ok(m)
    }

    fn vector(&mut self, label: &str, path: &Path) -> Outcome<TropVector> {
        let text = read_input(path)?;
        let v = parse_vector(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        let as_row = TropMatrix::from_vec(1, v.len(), v.0.clone())?;
        self.digest.add(label, &canonical_text(&as_row));
        Ok(v)
    }
}

fn read_input(path: &Path) -> Outcome<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Input(format!("standard input: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Runs one command.
pub fn run(cli: &Cli) -> Outcome<Report> {
    let mut ctx = Ctx {
        digest: InputDigest::default(),
        checks: Vec::new(),
        rng: cli.seed.map(ChaCha8Rng::seed_from_u64),
        max_n: cli.max_n,
    };
    if let Some(seed) = cli.seed {
        ctx.digest.arg("seed", seed);
    }
    let result = match &cli.command {
        Command::Mcm { a } => mcm(&mut ctx, a),
        Command::Plus { a } => plus(&mut ctx, a, false),
        Command::Star { a } => plus(&mut ctx, a, true),
        Command::Idem { e } => idem(&mut ctx, e),
        Command::Analyze { a } => analyze(&mut ctx, a),
        Command::Normalize { e } => normalize(&mut ctx, e),
        Command::Reduce { e, a } => reduce(&mut ctx, e, a.as_deref()),
        Command::Embed { f, n } => embed(&mut ctx, f, *n),
        Command::Representative { e } => representative(&mut ctx, e),
        Command::Group { e } => group(&mut ctx, e),
        Command::Eigenvector { e } => eigenvector(&mut ctx, e),
        Command::Factor { e, a } => factor(&mut ctx, e, a),
        Command::Affine { e, a } => affine(&mut ctx, e, a),
        Command::Classify { e, y } => classify(&mut ctx, e, y),
        Command::Green { a, b, rel } => green(&mut ctx, a, b, *rel),
    }?;
    Ok(Report {
        command: cli.command.name().to_string(),
        input_hash: ctx.digest.sha256(),
        result,
        assertions_checked: ctx.checks,
    })
}

fn object(pairs: Vec<(&str, Value)>) -> Value {
    Value::Object(
        pairs
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect::<Map<_, _>>(),
    )
}

fn unit(g: &MonomialUnit) -> Value {
    json!({ "sigma": format::permutation(g.sigma()), "lambda": format::vector(g.lambda()) })
}

fn classes(c: &[Vec<usize>]) -> Value {
    Value::Array(c.iter().map(|class| format::indices(class)).collect())
}

fn profile_json(p: &IdempotentProfile) -> Vec<(&'static str, Value)> {
    vec![
        ("rank", p.rank.into()),
        ("zero_diagonal", p.zero_diagonal.into()),
        ("critical_nodes", format::indices(&p.critical.critical_nodes)),
        ("classes", classes(&p.critical.classes)),
        ("representatives", format::indices(&p.critical.representatives)),
    ]
}

fn idempotent(ctx: &mut Ctx, e: &TropMatrix) -> Outcome<IdempotentProfile> {
    check_idempotent(e)?;
    ctx.check("idempotent");
    Ok(idempotent_profile(e)?)
}

fn full_rank_idempotent(ctx: &mut Ctx, e: &TropMatrix) -> Outcome<IdempotentProfile> {
    let p = idempotent(ctx, e)?;
    if p.rank != e.rows() {
        return Err(Error::NotFullRank {
            rank: p.rank,
            n: e.rows(),
        }
        .into());
    }
    ctx.check("full_rank");
    Ok(p)
}

fn mcm(ctx: &mut Ctx, path: &Path) -> Outcome<Value> {
    let a = ctx.matrix("A", path)?;
    let report = eigenspace_basis(&a)?;
    let lambda = report.critical.mcm;
    let v = &report.eigenbasis[0];
    ctx.ensure("eigenvalue_equation", a.mul_vec(v)? == v.scale(lambda))?;
    Ok(format::scalar(&lambda))
}

fn plus(ctx: &mut Ctx, path: &Path, star: bool) -> Outcome<Value> {
    let a = ctx.matrix("A", path)?;
    let p = kleene_plus(&a)?;
    ctx.check("mcm_nonpositive");
    // A⁺ = A ⊕ A⁺ ⊗ A.
    ctx.ensure("plus_fixed_point", a.oplus(&p.otimes(&a)?)? == p)?;
    if !star {
        return Ok(format::matrix(&p));
    }
    let s = kleene_star(&a)?;
    ctx.ensure("star_idempotent", is_idempotent(&s)?)?;
    ctx.ensure("star_zero_diagonal", (0..s.rows()).all(|i| s[(i, i)] == 0.into()))?;
    Ok(format::matrix(&s))
}

fn idem(ctx: &mut Ctx, path: &Path) -> Outcome<Value> {
    let e = ctx.matrix("E", path)?;
    let p = idempotent(ctx, &e)?;
    ctx.ensure("rank_equals_extremal_columns", p.rank == extremal_columns(&e).len())?;
    let mut fields = vec![("idempotent", Value::Bool(true))];
    fields.extend(profile_json(&p));
    Ok(object(fields))
}

fn analyze(ctx: &mut Ctx, path: &Path) -> Outcome<Value> {
    let a = ctx.matrix("A", path)?;
    let report = eigenspace_basis(&a)?;
    let c = &report.critical;
    for v in &report.eigenbasis {
        if a.mul_vec(v)? != v.scale(c.mcm) {
            return Err(CliError::Domain("internal check failed: eigenvalue_equation".into()));
        }
    }
    ctx.check("eigenvalue_equation");
    let square = a.is_square();
    let idem = square && is_idempotent(&a)?;
    let mut fields = vec![
        ("mcm", format::scalar(&c.mcm)),
        ("critical_nodes", format::indices(&c.critical_nodes)),
        ("classes", classes(&c.classes)),
        ("representatives", format::indices(&c.representatives)),
        ("normalized_plus", format::matrix(&report.aplus)),
        (
            "eigenbasis",
            Value::Array(report.eigenbasis.iter().map(|v| format::vector(v)).collect()),
        ),
        ("extremal_columns", format::indices(&extremal_columns(&a))),
        ("idempotent", idem.into()),
    ];
    if idem {
        fields.push(("rank", c.class_count().into()));
    }
    Ok(object(fields))
}

fn normalize(ctx: &mut Ctx, path: &Path) -> Outcome<Value> {
    let e = ctx.matrix("E", path)?;
    idempotent(ctx, &e)?;
    let n = zero_diag_normalize(&e)?;
    if n.valid {
        let zero_diag = (0..n.f.rows()).all(|i| n.f[(i, i)] == 0.into());
        ctx.ensure("normalized_zero_diagonal", zero_diag)?;
        ctx.ensure("normalized_span_equal", span_equal(&n.f, &e)?)?;
    }
    Ok(object(vec![("f", format::matrix(&n.f)), ("valid", n.valid.into())]))
}

fn reduce(ctx: &mut Ctx, path: &Path, element: Option<&Path>) -> Outcome<Value> {
    let e = ctx.matrix("E", path)?;
    idempotent(ctx, &e)?;
    let a = element.map(|p| ctx.matrix("A", p)).transpose()?;
    let red = full_rank_reduce(&e)?;
    ctx.ensure("reduced_full_rank", idempotent_profile(&red.f)?.rank == red.rank())?;
    let mut fields = vec![
        ("rank", red.rank().into()),
        ("representatives", format::indices(&red.representatives)),
        ("f", format::matrix(&red.f)),
        ("m", format::ext_matrix(&red.m)),
        ("n", format::ext_matrix(&red.n)),
        ("p", format::ext_matrix(&red.p)),
        ("zero_diagonal", red.zero_diagonal.into()),
    ];
    if let Some(a) = a {
        let phi = reduce_hclass_element(&red, &a)?;
        ctx.check("h_class_membership");
        ctx.ensure("lift_inverts_reduce", lift_hclass_element(&red, &phi)? == a)?;
        fields.push(("phi", format::matrix(&phi)));
    }
    if red.zero_diagonal {
        if let Some(rng) = ctx.rng.as_mut() {
            let d = sigma_group_capped(&red.f, ctx.max_n)?;
            let mut ok = true;
            for _ in 0..10 {
                let g = random_hclass_element(rng, &d)?;
                ok &= reduce_hclass_element(&red, &lift_hclass_element(&red, &g)?)? == g;
            }
            ctx.ensure("random_lift_roundtrip", ok)?;
        }
    }
    Ok(object(fields))
}

fn embed(ctx: &mut Ctx, path: &Path, n: usize) -> Outcome<Value> {
    let f = ctx.matrix("F", path)?;
    ctx.digest.arg("n", n);
    full_rank_idempotent(ctx, &f)?;
    let x = embed_full_rank(&f, n)?;
    let p = idempotent_profile(&x)?;
    ctx.ensure("embedding_idempotent", is_idempotent(&x)?)?;
    ctx.ensure("embedding_rank", p.rank == f.rows())?;
    Ok(object(vec![("matrix", format::matrix(&x)), ("rank", p.rank.into())]))
}

fn representative(ctx: &mut Ctx, path: &Path) -> Outcome<Value> {
    let e = ctx.matrix("E", path)?;
    let p = idempotent(ctx, &e)?;
    let r = zero_diag_representative(&e)?;
    let rp = idempotent_profile(&r)?;
    ctx.ensure("representative_zero_diagonal", rp.zero_diagonal)?;
    ctx.ensure("representative_same_rank", rp.rank == p.rank)?;
    Ok(object(vec![("matrix", format::matrix(&r)), ("rank", rp.rank.into())]))
}

fn decomposition_json(d: &GroupDecomposition) -> Vec<(&'static str, Value)> {
    vec![
        ("order", d.order.into()),
        ("iso", d.iso.clone().into()),
        (
            "permutations",
            Value::Array(d.permutation_images.iter().map(|p| format::permutation(p)).collect()),
        ),
        ("members", Value::Array(d.sigma_group.iter().map(unit).collect())),
        (
            "generators",
            Value::Array(d.generators().into_iter().map(unit).collect()),
        ),
    ]
}

fn group(ctx: &mut Ctx, path: &Path) -> Outcome<Value> {
    let e = ctx.matrix("E", path)?;
    // Fails before any enumeration when E is not idempotent.
    idempotent(ctx, &e)?;
    let s = group_structure(&e, ctx.max_n)?;
    let d = &s.decomposition;
    for c in &d.checks {
        if *c != "idempotent" {
            ctx.check(c);
        }
    }
    if let Some(rng) = ctx.rng.as_mut() {
        let mut ok = true;
        for _ in 0..10 {
            let a = random_hclass_element(rng, d)?;
            let g = factor_hclass_element(&d.e, &a)?;
            let (_, g0) = decompose_unit(&g)?;
            ok &= gamma(&d.e, &g)? == a && d.member(g0.sigma()) == Some(&g0);
        }
        ctx.ensure("random_factor_roundtrip", ok)?;
    }
    let t = &s.trace;
    let reduction = object(vec![
        ("n", t.n.into()),
        ("rank", t.rank.into()),
        (
            "representative",
            t.representative.as_ref().map_or(Value::Null, format::matrix),
        ),
        ("representatives", format::indices(&t.representatives)),
        ("reduced", format::matrix(&t.reduced)),
    ]);
    let mut fields = decomposition_json(d);
    fields.push(("reduction", reduction));
    Ok(object(fields))
}

fn full_rank_group(ctx: &mut Ctx, e: &TropMatrix) -> Outcome<GroupDecomposition> {
    full_rank_idempotent(ctx, e)?;
    let d = sigma_group_capped(e, ctx.max_n)?;
    ctx.check("sigma_group");
    Ok(d)
}

fn eigenvector(ctx: &mut Ctx, path: &Path) -> Outcome<Value> {
    let e = ctx.matrix("E", path)?;
    let d = full_rank_group(ctx, &e)?;
    let x = common_eigenvector_of(&d)?;
    ctx.ensure("in_column_space", e.mul_vec(&x)? == x)?;
    let mut fixed = true;
    for g in &d.sigma_group {
        fixed &= is_multiple(&x, &gamma(&e, g)?.mul_vec(&x)?).is_some();
    }
    ctx.ensure("eigenvector_of_sigma", fixed)?;
    if let Some(rng) = ctx.rng.as_mut() {
        let mut ok = true;
        for _ in 0..10 {
            let a = random_hclass_element(rng, &d)?;
            ok &= is_multiple(&x, &a.mul_vec(&x)?).is_some();
        }
        ctx.ensure("random_hclass_eigenvector", ok)?;
    }
    Ok(object(vec![
        ("vector", format::vector(&x)),
        ("projective", format::proj_point(&projectivize(&x)?)),
        ("orbit_size", d.order.into()),
    ]))
}

fn hclass_pair(ctx: &mut Ctx, e_path: &Path, a_path: &Path) -> Outcome<(TropMatrix, TropMatrix, MonomialUnit)> {
    let e = ctx.matrix("E", e_path)?;
    let a = ctx.matrix("A", a_path)?;
    full_rank_idempotent(ctx, &e)?;
    if a.shape() != e.shape() {
        return Err(Error::Dimension {
            op: "h-class element",
            expected: e.shape(),
            found: a.shape(),
        }
        .into());
    }
    if !green_relation(&a, &e, GreenRelation::H)? {
        return Err(Error::NotInHClass.into());
    }
    ctx.check("h_class_membership");
    let g = factor_hclass_element(&e, &a)?;
    ctx.ensure("gamma_inverts_factor", gamma(&e, &g)? == a)?;
    Ok((e, a, g))
}

fn factor(ctx: &mut Ctx, e_path: &Path, a_path: &Path) -> Outcome<Value> {
    let (e, _, g) = hclass_pair(ctx, e_path, a_path)?;
    let (mu, g0) = decompose_unit(&g)?;
    ctx.check("uniform_cycle_means");
    ctx.ensure("sigma_member_commutes", g0.commutes_with(&e)?)?;
    Ok(object(vec![
        ("sigma", format::permutation(g.sigma())),
        ("lambda", format::vector(g.lambda())),
        ("mu", format::scalar(&mu)),
        ("sigma_member", unit(&g0)),
    ]))
}

fn affine(ctx: &mut Ctx, e_path: &Path, a_path: &Path) -> Outcome<Value> {
    let (e, a, _) = hclass_pair(ctx, e_path, a_path)?;
    let form = affine_form(&e, &a)?;
    let mut points: Vec<TropVector> = e.columns();
    if let Some(rng) = ctx.rng.as_mut() {
        points.extend((0..20).map(|_| random_point_in_span(rng, &e)));
    }
    let mut ok = true;
    for y in &points {
        ok &= form.apply(y)? == a.mul_vec(y)?;
    }
    ctx.ensure(
        if ctx.rng.is_some() {
            "affine_matches_action_random"
        } else {
            "affine_matches_action_columns"
        },
        ok,
    )?;
    let mut fields = vec![
        ("sigma", format::permutation(&form.sigma)),
        ("lambda", format::vector(&form.lambda)),
    ];
    if e.rows() >= 2 {
        let proj = form.projective()?;
        fields.push((
            "projective",
            object(vec![
                ("linear", format::int_matrix(&proj.linear)),
                ("offset", format::proj_point(&proj.offset)),
            ]),
        ));
    }
    Ok(object(fields))
}

fn classify(ctx: &mut Ctx, e_path: &Path, y_path: &Path) -> Outcome<Value> {
    let e = ctx.matrix("E", e_path)?;
    let y = ctx.vector("y", y_path)?;
    full_rank_idempotent(ctx, &e)?;
    if y.len() != e.rows() {
        return Err(Error::Dimension {
            op: "classify",
            expected: (e.rows(), 1),
            found: (y.len(), 1),
        }
        .into());
    }
    let class = classify_point(&e, &y)?;
    let xhat = residual_solve(&e, &y)?;
    ctx.ensure("principal_subsolution", e.mul_vec(&xhat)?.le(&y))?;
    if let Some(rng) = ctx.rng.as_mut() {
        // Exterior points are sent to the boundary by E.
        let mut ok = true;
        for _ in 0..20 {
            let z = random_vector(rng, e.rows(), -10, 10, 2);
            if in_span(&e, &z)?.is_none() {
                ok &= classify_point(&e, &e.mul_vec(&z)?)? == tropical_groups::PointClass::Boundary;
            }
        }
        ctx.ensure("random_exterior_maps_to_boundary", ok)?;
    }
    Ok(object(vec![
        ("class", class.as_str().into()),
        ("principal_solution", format::vector(&xhat)),
    ]))
}

fn green(ctx: &mut Ctx, a_path: &Path, b_path: &Path, rel: Relation) -> Outcome<Value> {
    let a = ctx.matrix("A", a_path)?;
    let b = ctx.matrix("B", b_path)?;
    let (name, relation) = match rel {
        Relation::LeqR => ("leqR", GreenRelation::LeqR),
        Relation::LeqL => ("leqL", GreenRelation::LeqL),
        Relation::R => ("R", GreenRelation::R),
        Relation::L => ("L", GreenRelation::L),
        Relation::H => ("H", GreenRelation::H),
    };
    ctx.digest.arg("rel", name);
    let holds = green_relation(&a, &b, relation)?;
    Ok(object(vec![("relation", name.into()), ("holds", holds.into())]))
}
