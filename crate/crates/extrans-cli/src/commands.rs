//! The data-emitting subcommands.

use extrans::catalog::{case_data, CaseData, SingPoint, TransitionCase, TransitionPoint};
use extrans::dirichlet::DirichletCharacter;
use extrans::local_model::{extremal_series, f_series, g_series, mirror_q, u_series, v_series};
use extrans::modular::{combo_expansion, extremal_eisenstein_combo, hauptmodul_p};
use extrans::qseries::{GaussRational, Rational, Series};
use extrans::transition_limits::{
    cusp_limit, path_image, real_axis_limit, CuspLimit, CuspRep, RealAxisLimit,
};
use extrans::Result;

use crate::output::{Doc, Output, Table};

fn series_doc(s: &Series<Rational>) -> Doc {
    Doc::List(s.coeffs().iter().cloned().map(Doc::Rat).collect())
}

fn gauss_series_doc(s: &Series<GaussRational>) -> Doc {
    Doc::List(s.coeffs().iter().cloned().map(Doc::Gauss).collect())
}

fn case_doc(c: &CaseData) -> Doc {
    let sing = c
        .sing_points
        .iter()
        .map(|p| match p {
            SingPoint::Zero => Doc::str("0"),
            SingPoint::Infinity => Doc::str("infinity"),
            SingPoint::Finite(x) => Doc::map([
                ("exact", Doc::str(x.to_string())),
                ("approx", Doc::Float(x.to_f64())),
            ]),
        })
        .collect();
    let point = match &c.transition_point {
        TransitionPoint::Cusp { a, c } => Doc::map([
            ("kind", Doc::str("cusp")),
            ("cusp", Doc::str(format!("{a}/{c}"))),
        ]),
        TransitionPoint::Elliptic(label) => {
            Doc::map([("kind", Doc::str("elliptic")), ("point", Doc::str(*label))])
        }
    };
    Doc::map([
        ("case", Doc::str(c.case.label())),
        ("degree", Doc::Int(c.degree)),
        ("kappa", Doc::Int(c.kappa)),
        ("lambda", Doc::Int(c.lambda)),
        ("mu", Doc::Int(c.mu)),
        ("base_change_degree", Doc::Int(c.base_change_degree)),
        ("singular_points", Doc::List(sing)),
        ("transition_point", point),
        (
            "hodge",
            Doc::List(vec![Doc::Int(c.hodge.0), Doc::Int(c.hodge.1)]),
        ),
        ("euler_defect", Doc::Int(c.euler_defect)),
    ])
}

pub fn constants(d: Option<TransitionCase>) -> Result<Output> {
    match d {
        Some(d) => Ok(Output::doc(case_doc(&case_data(d)?))),
        None => {
            let all = TransitionCase::SUPPORTED
                .iter()
                .map(|d| case_data(*d).map(|c| case_doc(&c)));
            Ok(Output::doc(Doc::List(all.collect::<Result<_>>()?)))
        }
    }
}

pub fn series(d: TransitionCase, order: usize) -> Result<Output> {
    let cols = [
        ("f", f_series(d, order)?),
        ("g", g_series(d, order)?),
        ("Q", mirror_q(d, order)?),
        ("E", extremal_series(d, order)?),
    ];
    let table = Table {
        header: std::iter::once("k".to_string())
            .chain(cols.iter().map(|(n, _)| n.to_string()))
            .collect(),
        rows: (0..=order)
            .map(|k| {
                std::iter::once(Doc::Int(k as i64))
                    .chain(cols.iter().map(|(_, s)| Doc::Rat(s.coeff(k))))
                    .collect()
            })
            .collect(),
    };
    let mut entries = vec![
        ("d", Doc::str(d.label())),
        ("order", Doc::Int(order as i64)),
    ];
    entries.extend(cols.iter().map(|(n, s)| (*n, series_doc(s))));
    Ok(Output {
        doc: Doc::map(entries),
        table: Some(table),
    })
}

pub fn mirror(d: TransitionCase, order: usize) -> Result<Output> {
    let q = mirror_q(d, order)?;
    let p = q.reversion()?;
    Ok(Output::doc(Doc::map([
        ("d", Doc::str(d.label())),
        ("order", Doc::Int(order as i64)),
        ("Q_of_P", series_doc(&q)),
        ("P_of_Q", series_doc(&p)),
        ("u", series_doc(&u_series(d, order)?)),
        ("theta_f_over_f", series_doc(&v_series(d, order)?)),
    ])))
}

pub fn eisenstein(d: TransitionCase, order: usize) -> Result<Output> {
    let combo = extremal_eisenstein_combo(d)?;
    let terms = combo
        .iter()
        .map(|(c, p)| {
            Doc::map([
                ("coefficient", Doc::Gauss(c.clone())),
                ("chi", Doc::str(p.chi.to_string())),
                ("psi", Doc::str(p.psi.to_string())),
                ("n", Doc::Int(p.n as i64)),
                ("weight", Doc::Int(p.k)),
            ])
        })
        .collect();
    let hauptmodul = hauptmodul_p(d, order)?;
    Ok(Output::doc(Doc::map([
        ("d", Doc::str(d.label())),
        ("order", Doc::Int(order as i64)),
        ("terms", Doc::List(terms)),
        (
            "q_expansion",
            gauss_series_doc(&combo_expansion(&combo, order)?),
        ),
        ("hauptmodul", series_doc(&hauptmodul.series)),
    ])))
}

fn multipliers_doc(m: &[(DirichletCharacter, GaussRational)]) -> Doc {
    Doc::List(
        m.iter()
            .map(|(psi, c)| {
                Doc::map([
                    ("character", Doc::str(psi.to_string())),
                    ("multiplier", Doc::Gauss(c.clone())),
                ])
            })
            .collect(),
    )
}

fn closed_form(l: &CuspLimit) -> String {
    let mut parts = Vec::new();
    if let Some((n, d)) = l.root_of_unity {
        parts.push(format!("exp(2πi·({n}/{d}))"));
    }
    if !l.trivial_part.is_empty() {
        let sum: Vec<String> = l
            .trivial_part
            .iter()
            .map(|(psi, c)| format!("({c})·L'(-1, {psi})"))
            .collect();
        parts.push(format!("exp({})", sum.join(" + ")));
    }
    if l.root_of_unity.is_none() {
        if let Some(g) = &l.nontrivial_pi_i {
            parts.insert(0, format!("-exp(2πi·({}))·exp(({g})·πi)", l.r));
        }
    }
    if parts.is_empty() {
        "numeric only".into()
    } else {
        parts.join("·")
    }
}

fn cusp_limit_doc(l: &CuspLimit) -> Doc {
    Doc::map([
        ("d", Doc::str(l.d.label())),
        ("cusp", Doc::str(l.r.to_string())),
        ("closed_form", Doc::str(closed_form(l))),
        ("log_value", Doc::Complex(l.log_value)),
        ("trivial_part", multipliers_doc(&l.trivial_part)),
        ("trivial_value", Doc::Complex(l.trivial_value)),
        ("nontrivial_part", Doc::Complex(l.nontrivial_part)),
        (
            "nontrivial_pi_i",
            Doc::opt(l.nontrivial_pi_i.clone(), Doc::Gauss),
        ),
        ("q_value", Doc::Complex(l.q_value)),
        ("modulus", Doc::Float(l.modulus())),
        (
            "root_of_unity",
            Doc::opt(l.root_of_unity, |(n, d)| {
                Doc::List(vec![Doc::Int(n), Doc::Int(d as i64)])
            }),
        ),
    ])
}

fn real_axis_doc(l: &RealAxisLimit) -> Doc {
    let path = if l.d == TransitionCase::D8 {
        "(0, i∞)"
    } else {
        "(0, ∞)"
    };
    Doc::map([
        ("d", Doc::str(l.d.label())),
        ("path", Doc::str(path)),
        ("log_limit", Doc::Complex(l.log_limit)),
        ("q_value", Doc::Complex(l.q_limit)),
        ("error_estimate", Doc::Float(l.error_estimate)),
    ])
}

pub fn limit(d: TransitionCase, cusp: Option<CuspRep>) -> Result<Output> {
    let cusp = match cusp {
        Some(c) => c,
        None => match CuspRep::transition(d) {
            Ok(c) => c,
            Err(_) => return Ok(Output::doc(real_axis_doc(&real_axis_limit(d)?))),
        },
    };
    Ok(Output::doc(cusp_limit_doc(&cusp_limit(d, cusp)?)))
}

pub const PATH_HEADER: [&str; 8] = [
    "dir_index",
    "s",
    "q_re",
    "q_im",
    "P_re",
    "P_im",
    "Q_re",
    "Q_im",
];

pub fn path(d: TransitionCase, dirs: u64, samples: usize, s_max: f64) -> Result<Output> {
    let mut rows = Vec::new();
    let mut docs = Vec::new();
    for n in 1..=dirs {
        for r in path_image(d, n, samples, s_max)? {
            rows.push(vec![
                Doc::Int(n as i64),
                Doc::Float(r.s),
                Doc::Float(r.q.re),
                Doc::Float(r.q.im),
                Doc::Float(r.p.re),
                Doc::Float(r.p.im),
                Doc::Float(r.big_q.re),
                Doc::Float(r.big_q.im),
            ]);
            docs.push(Doc::map([
                ("dir_index", Doc::Int(n as i64)),
                ("s", Doc::Float(r.s)),
                ("q", Doc::Complex(r.q)),
                ("P", Doc::Complex(r.p)),
                ("Q", Doc::Complex(r.big_q)),
            ]));
        }
    }
    let table = Table {
        header: PATH_HEADER.iter().map(|s| s.to_string()).collect(),
        rows,
    };
    let doc = Doc::map([
        ("d", Doc::str(d.label())),
        ("dirs", Doc::Int(dirs as i64)),
        ("samples", Doc::Int(samples as i64)),
        ("s_max", Doc::Float(s_max)),
        ("rows", Doc::List(docs)),
    ]);
    Ok(Output {
        doc,
        table: Some(table),
    })
}
