//! One function per subcommand, each producing a [`Report`].

use flagcy_core::bundle::{BalancedDatum, GauduchonDatum};
use flagcy_core::picard::{is_primitive, primitive_basis};
use flagcy_core::potential_lab::{check_eigenvalue_formula, PotentialSpec};
use flagcy_core::{Family, InvariantClass, LieType, ParabolicFlag, RootDatum};
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::input::{parse_bundles, parse_class, parse_index_list, parse_rational_arg};
use crate::report::{self as r, Failure, Report};

#[derive(Debug, Clone)]
pub struct FlagInput {
    pub lie_type: String,
    pub rank: usize,
    pub parabolic: String,
}

impl FlagInput {
    fn build(&self) -> Result<ParabolicFlag, Failure> {
        let family: Family = self.lie_type.parse().map_err(Failure::parse)?;
        let parabolic = parse_index_list(&self.parabolic).map_err(Failure::parse)?;
        let lie = LieType::new(family, self.rank)?;
        Ok(ParabolicFlag::new(RootDatum::new(lie), &parabolic)?)
    }

    fn echo(&self) -> Value {
        let parabolic = parse_index_list(&self.parabolic)
            .map(|p| r::index_list(&p))
            .unwrap_or_else(|_| Value::String(self.parabolic.clone()));
        json!({
            "type": self.lie_type.to_ascii_uppercase(),
            "rank": self.rank,
            "parabolic": parabolic,
        })
    }
}

fn finish(command: &str, mut inputs: Value, extra: Value, outcome: Result<Value, Failure>) -> Report {
    let (results, failure) = match outcome {
        Ok(results) => (results, None),
        Err(f) => (Value::Null, Some(f)),
    };
    if let (Value::Object(base), Value::Object(extra)) = (&mut inputs, extra) {
        base.extend(extra);
    }
    Report {
        command: command.into(),
        inputs,
        results,
        failure,
    }
}

pub fn describe(input: &FlagInput) -> Report {
    let outcome = input.build().map(|flag| {
        let datum = flag.datum();
        let roots: Vec<Value> = datum
            .positive_roots()
            .iter()
            .map(|beta| {
                let in_phi = flag.complement().iter().any(|&a| beta.involves(a));
                json!({
                    "root": beta.root_coords,
                    "coroot": r::rationals(&beta.coroot_coords),
                    "height": beta.height(),
                    "in_phi_plus": in_phi,
                })
            })
            .collect();
        let cone: Vec<Value> = (0..flag.picard_rank())
            .map(|slot| r::class(&flag, &InvariantClass::generator(flag.picard_rank(), slot)))
            .collect();
        let results = json!({
            "lie_type": format!("{}{}", datum.lie_type().family(), datum.rank()),
            "parabolic_set": r::index_list(flag.parabolic_set()),
            "complement": r::index_list(flag.complement()),
            "dim": flag.dim(),
            "picard_rank": flag.picard_rank(),
            "ell": r::over_complement(&flag, flag.anticanonical_coeffs().iter().map(r::integer)),
            "fano_index": r::integer(&flag.fano_index()),
            "delta_p": r::rationals(&flag.delta_p().coeffs),
            "anticanonical_class": r::class(&flag, &flag.anticanonical_class()),
            "ricci_class": r::class(&flag, &flag.ricci_class()),
            "kahler_cone_generators": cone,
            "positive_roots": roots,
        });
        results
    });
    finish("describe", input.echo(), Value::Null, outcome)
}

pub fn primitive_basis_cmd(input: &FlagInput, omega0: &str, gamma: Option<usize>) -> Report {
    let mut extra = Value::Null;
    let outcome = (|| {
        let flag = input.build()?;
        let omega = parse_class(omega0, &flag).map_err(Failure::parse)?;
        let gamma = match gamma {
            Some(0) => return Err(Failure::parse("--gamma is 1-based")),
            g => g.map(|g| g - 1),
        };
        extra = json!({
            "omega0": r::class(&flag, &omega),
            "gamma": gamma.map(r::alpha_key),
        });
        let pb = primitive_basis(&flag, &omega, gamma)?;
        let basis = pb
            .basis
            .iter()
            .map(|b| {
                let c1 = b.first_chern_class();
                Ok(json!({
                    "bundle": r::bundle(&flag, b),
                    "contraction": r::two_pi(&flag.lefschetz_contraction(&omega, &c1)?),
                    "degree": r::two_pi(&flag.degree(&c1, &omega)?),
                    "primitive": is_primitive(&flag, &c1, &omega)?,
                }))
            })
            .collect::<Result<Vec<_>, Failure>>()?;
        let results = json!({
            "pivot_gamma": r::alpha_key(pb.pivot_gamma),
            "omega0_integral": r::over_complement(&flag, pb.omega0.iter().map(r::integer)),
            "q": r::over_complement(&flag, pb.q.iter().map(r::integer)),
            "tau": r::integer(&pb.tau),
            "basis": basis,
            "index_in_degree_zero_lattice": r::integer(&pb.index_in_kernel()),
        });
        Ok(results)
    })();
    finish("primitive-basis", input.echo(), extra, outcome)
}

pub struct GauduchonInput<'a> {
    pub k: i64,
    pub t: &'a str,
    pub bundles: &'a str,
    pub lambda: Option<&'a str>,
    pub diagnostic: bool,
}

pub fn gauduchon(input: &FlagInput, args: &GauduchonInput<'_>) -> Report {
    let mut extra = Value::Null;
    let outcome = (|| {
        let flag = input.build()?;
        let t = parse_rational_arg(args.t).map_err(Failure::parse)?;
        let bundles = parse_bundles(args.bundles, &flag).map_err(Failure::parse)?;
        let lambda = args
            .lambda
            .map(parse_rational_arg)
            .transpose()
            .map_err(Failure::parse)?;
        extra = json!({
            "k": args.k,
            "t": r::rational(&t),
            "bundles": bundles.iter().map(|b| r::bundle(&flag, b)).collect::<Vec<_>>(),
            "lambda": lambda.as_ref().map(r::rational),
            "diagnostic": args.diagnostic,
        });
        let datum = if args.diagnostic {
            let lambda = match lambda {
                Some(l) => l,
                None => flagcy_core::bundle::lambda_kt(&flag, args.k, &t)
                    .unwrap_or_else(|_| flagcy_core::Rational::one()),
            };
            GauduchonDatum::diagnostic(&flag, args.k, &t, &lambda, &bundles)?
        } else {
            if lambda.is_some() {
                return Err(Failure::parse("--lambda is only accepted with --diagnostic"));
            }
            GauduchonDatum::build(&flag, args.k, &t, &bundles)?
        };
        let residual = datum.verify_ricci_flat();
        let c1 = datum.verify_c1_trivial().ok();
        let lee = flagcy_core::bundle::lee_form_coefficients(&flag, &datum.psi, &datum.omega0).ok();
        let results = json!({
            "lambda": r::rational(&datum.lambda),
            "fano_index": r::integer(&flag.fano_index()),
            "torus_rank": datum.psi.len(),
            "omega0": r::class(&flag, &datum.omega0),
            "psi": datum.psi.iter().map(|p| r::class(&flag, p)).collect::<Vec<_>>(),
            "contractions": r::rationals(&datum.contractions()),
            "ricci_residual": r::class(&flag, &residual),
            "ricci_flat": residual.is_zero(),
            "c1_ratio": c1.as_ref().map(r::rational),
            "lee_form": lee.as_deref().map(r::rationals),
        });
        Ok(results)
    })();
    finish("gauduchon", input.echo(), extra, outcome)
}

pub fn balanced(input: &FlagInput, omega0: &str, bundles: &str, diagnostic: bool) -> Report {
    let mut extra = Value::Null;
    let outcome = (|| {
        let flag = input.build()?;
        let omega = parse_class(omega0, &flag).map_err(Failure::parse)?;
        let bundles = parse_bundles(bundles, &flag).map_err(Failure::parse)?;
        extra = json!({
            "omega0": r::class(&flag, &omega),
            "bundles": bundles.iter().map(|b| r::bundle(&flag, b)).collect::<Vec<_>>(),
            "diagnostic": diagnostic,
        });
        let datum = if diagnostic {
            let psi = bundles
                .iter()
                .map(|b| b.first_chern_class().with_two_pi_power(1))
                .collect();
            BalancedDatum::diagnostic(&flag, &omega, psi)?
        } else {
            BalancedDatum::build(&flag, &omega, &bundles)?
        };
        let coclosed = datum.verify_coclosed();
        let results = json!({
            "psi": datum.psi.iter().map(|p| r::class(&flag, p)).collect::<Vec<_>>(),
            "coclosed": r::rationals(&coclosed),
            "balanced": coclosed.iter().all(|c| c.is_zero()),
            "lee_form": datum.lee_form().ok().as_deref().map(r::rationals),
        });
        Ok(results)
    })();
    finish("balanced", input.echo(), extra, outcome)
}

pub fn verify_numeric(input: &FlagInput, omega0: &str, psi: &str, step: f64, tol: f64) -> Report {
    let mut failed = None;
    let mut extra = Value::Null;
    let outcome = (|| {
        let flag = input.build()?;
        let omega = parse_class(omega0, &flag).map_err(Failure::parse)?;
        let psi = parse_class(psi, &flag).map_err(Failure::parse)?;
        if !step.is_finite() || step <= 0.0 || tol.is_nan() || tol <= 0.0 {
            return Err(Failure::parse("--step and --tol must be positive"));
        }
        extra = json!({
            "omega0": r::class(&flag, &omega),
            "psi": r::class(&flag, &psi),
            "step": step,
            "tol": tol,
        });
        let rep = check_eigenvalue_formula(
            &flag,
            &PotentialSpec::from_class(&omega),
            &PotentialSpec::from_class(&psi),
            step,
            tol,
        )?;
        if !rep.passed() {
            failed = Some(Failure {
                exit: r::Exit::Tolerance,
                code: "ToleranceExceeded".into(),
                message: format!("max deviation {:e} is not below {:e}", rep.max_deviation, tol),
            });
        }
        let results = json!({
            "exact_eigenvalues": r::rationals(&rep.exact),
            "exact_sorted": r::rationals(&rep.exact_sorted),
            "numeric_eigenvalues": rep.numeric,
            "max_deviation": rep.max_deviation,
            "exact_contraction": r::rational(&rep.exact_contraction),
            "numeric_trace": rep.numeric_trace,
            "passed": rep.passed(),
        });
        Ok(results)
    })();
    let mut report = finish("verify-numeric", input.echo(), extra, outcome);
    if report.failure.is_none() {
        report.failure = failed;
    }
    report
}
