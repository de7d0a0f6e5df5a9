"""
Configuration templates for the betanag init command.
"""

from typing import List


def get_init_template(name: str) -> str:
    """
    Get the YAML configuration template for an experiment.

    Args:
        name: minimal, acceptance, deviation or phase

    Returns:
        YAML configuration template (minimal for unknown names)
    """
    templates = {
        "minimal": MINIMAL_TEMPLATE,
        "acceptance": ACCEPTANCE_TEMPLATE,
        "deviation": DEVIATION_TEMPLATE,
        "phase": PHASE_TEMPLATE,
    }

    return templates.get(name, MINIMAL_TEMPLATE)


def template_names() -> List[str]:
    return ["minimal", "acceptance", "deviation", "phase"]


MINIMAL_TEMPLATE = """# betanag minimal experiment
# Heavy ball (beta=0) and NAG-SC (beta=1) on a 2-D quadratic, one step size.

objective:
  kind: quadratic          # quadratic | logsumexp
  eigenvalues: [1, 10]     # mu = 1, L = 10
  x_star: [0, 0]
  x0: [1, 1]

methods:
  betas: [0, 1]
  steps: [0.025]           # s = 1/(4L)
  max_iter: 200
  variant: single_variable # single_variable | two_sequence | heavy_ball_reference | nag_sc_reference | gradient_descent

checks: [energy-decrement]

output_dir: ./results/minimal
reports: [json, markdown]
seed: 0
"""

ACCEPTANCE_TEMPLATE = """# betanag acceptance grid
# beta in {0, 0.3, beta_c, 1}, s in {1/40, 1/80}, mu = 1, L = 10, 500 steps.
# Switch the objective block to the logsumexp one to run the nonquadratic case.

objective:
  kind: quadratic
  eigenvalues: [1, 10]
  x0: [1, 1]
  # kind: logsumexp
  # dimension: 2
  # mu: 1.0
  # smoothness: 9.0        # L = smoothness + mu
  # seed: 7
  # x0: [1, 1]

methods:
  betas: [0, 0.3, beta_c, 1]   # beta_c resolves to the critical beta of each step
  steps: [0.025, 0.0125]
  max_iter: 500
  grad_tol: 0.0

ode:
  t_end: 40.0
  integrator_step: auto        # min(sqrt(s), 1/sqrt(L))/50, aligned to multiples of sqrt(s)
  hvp_fallback: false          # true: finite-difference Hessian-vector products when the objective has none

checks: [energy-decrement, continuous-bound]

output_dir: ./results/acceptance   # placed under $BETANAG_OUTPUT_ROOT when set
reports: [json, markdown]
seed: 0
"""

DEVIATION_TEMPLATE = """# betanag deviation ladder
# max_k |x_k - X(k sqrt(s))| for s in {1/40, 1/160, 1/640} and T = 5.

objective:
  kind: quadratic
  eigenvalues: [1, 10]
  x0: [1, 1]

methods:
  betas: [0, 0.5, 1]
  steps: [0.025]
  max_iter: 500

ode:
  deviation_horizon: 5.0
  deviation_steps: [0.025, 0.00625, 0.0015625]
  deviation_betas: [0, 0.5, 1]

checks: [deviation-ladder]

output_dir: ./results/deviation
"""

PHASE_TEMPLATE = """# betanag phase diagram
# Cells use L = 1, mu = mu_over_l and s = 1/c.

objective:
  kind: quadratic
  eigenvalues: [1, 10]
  x0: [1, 1]

methods:
  betas: [beta_c]
  c_values: [4]

phase:
  mu_over_l: {start: 0.01, stop: 0.2, num: 20}
  c_values: {start: 4, stop: 20, num: 20}
  betas: {start: 0.0, stop: 1.0, num: 21}

checks: [phase-sweep]

output_dir: ./results/phase
"""
