"""Built-in quality catalog: the default attributes, requirement texts and
per-level requirement matrix.

Everything here is plain data keyed by string tokens; `mlquality.model`
turns it into a validated `QualityModel`. User configuration may override
individual texts and matrix cells but not the set of rows.
"""

from __future__ import annotations

CHARACTERISTIC_DESCRIPTIONS: dict[str, str] = {
    "utility": (
        "How well the system's functions meet the needs of its users under "
        "the stated conditions."
    ),
    "economy": (
        "The system's performance relative to the resources it consumes."
    ),
    "robustness": (
        "How little the system degrades when exposed to dynamic or adverse "
        "conditions."
    ),
    "productionizability": (
        "The ease of performing the actions required to run the system in "
        "production."
    ),
    "modifiability": (
        "The effectiveness with which the system can be adapted to changed "
        "requirements or environments."
    ),
    "comprehensibility": (
        "The degree to which users and contributors can understand the "
        "relevant aspects of the system."
    ),
    "responsibility": (
        "The trustworthiness of the system: ownership, security, fairness "
        "and transparency."
    ),
}

# One row per quality attribute, in canonical catalog order:
# (id, characteristic, minimal requirement, full requirement, reasoning,
#  demand tokens for levels 1..5, remediation text).
#
# A minimal requirement of None marks an essential attribute: it only has a
# full requirement, and a "small" gap is not a legal value for it.
DEFAULT_ROWS: tuple[
    tuple[str, str, str | None, str, str, tuple[str, str, str, str, str], str],
    ...,
] = (
    (
        "accuracy",
        "utility",
        "The system outperforms a simple baseline",
        "The system outperforms a baseline and its input data are validated",
        "Beating a baseline justifies the effort of running an ML system; "
        "validated inputs keep broken versions out of production.",
        ("min", "min", "full", "full", "full"),
        "Benchmark the system against a simple baseline and add automated "
        "validation of its input data.",
    ),
    (
        "effectiveness",
        "utility",
        "Effectiveness is verified with an A/B experiment",
        "Long-term effectiveness is verified by repeating the A/B test "
        "within six months",
        "Controlled experiments are the reliable way to show the system "
        "still pays off as its environment drifts.",
        ("-", "-", "min", "min", "full"),
        "Verify effectiveness with an A/B experiment and repeat the "
        "experiment within six months to confirm the impact holds.",
    ),
    (
        "responsiveness",
        "utility",
        None,
        "Latency and throughput requirements are met",
        "Predictions that arrive too late, or too few of them, have no "
        "business impact.",
        ("full", "full", "full", "full", "full"),
        "Define latency and throughput targets for the serving path and "
        "bring the system within them.",
    ),
    (
        "usability",
        "utility",
        None,
        "The system is deployed in a serving system",
        "The system only has value if its intended users can actually "
        "consume its predictions.",
        ("-", "-", "full", "full", "full"),
        "Deploy the system in a serving system so consumers can reach its "
        "predictions.",
    ),
    (
        "cost_effectiveness",
        "economy",
        None,
        "Revenue generated by the system exceeds its training and "
        "inference costs",
        "A system that costs more to train and serve than its predictions "
        "return should not stay deployed.",
        ("-", "-", "-", "-", "full"),
        "Quantify training and inference costs and confirm the revenue "
        "attributed to the system exceeds them.",
    ),
    (
        "efficiency",
        "economy",
        "Basic operations are automated",
        "Resources for training and inference are optimized",
        "The system should reach its objective with the minimum amount of "
        "compute and manual labour.",
        ("-", "-", "-", "min", "full"),
        "Automate routine operations and optimize the resources spent on "
        "training and inference.",
    ),
    (
        "availability",
        "robustness",
        None,
        "The deployed service meets its SLAs",
        "An unavailable system cannot achieve its business purpose.",
        ("full", "full", "full", "full", "full"),
        "Define SLAs for the deployed service and bring it into compliance "
        "with them.",
    ),
    (
        "resilience",
        "robustness",
        "At most 30% of ML pipeline runs fail per quarter",
        "At most 10% of ML pipeline runs fail per quarter",
        "Automated pipelines must not fail so often that stale models end "
        "up serving predictions.",
        ("-", "-", "min", "min", "full"),
        "Harden the ML pipelines until at most 10% of runs per quarter "
        "fail.",
    ),
    (
        "adaptability",
        "robustness",
        "The system is partially adaptable",
        "The system is adaptable, e.g. retrained frequently",
        "The system operates in a changing environment and loses impact "
        "when it cannot follow that change.",
        ("-", "-", "min", "full", "full"),
        "Set up scheduled retraining so the system keeps up with its "
        "changing environment.",
    ),
    (
        "scalability",
        "robustness",
        None,
        "The system is deployed and can scale resources with traffic",
        "A system reused across use cases must handle traffic of very "
        "different magnitudes.",
        ("-", "-", "-", "-", "full"),
        "Deploy the system on infrastructure that scales resources "
        "automatically with traffic.",
    ),
    (
        "repeatability",
        "productionizability",
        "The ML life-cycle pipeline is partially automated",
        "The pipeline repeating the ML life-cycle is fully automated",
        "Automation removes manual toil and with it the chance of human "
        "error in the life-cycle.",
        ("-", "-", "min", "full", "full"),
        "Automate the full ML life-cycle pipeline end to end.",
    ),
    (
        "monitoring",
        "productionizability",
        "ML performance is monitored",
        "ML performance, feature drift and metrics are monitored",
        "ML systems fail in many places; monitored indicators are how "
        "degradation gets caught.",
        ("-", "-", "min", "min", "full"),
        "Extend monitoring beyond model performance to feature drift and "
        "system metrics.",
    ),
    (
        "maintainability",
        "modifiability",
        "Code is versioned",
        "Code is versioned and the readability full requirement is met",
        "Ease of maintenance drives downtime and iteration speed, and "
        "through them the commercial impact.",
        ("-", "min", "min", "min", "full"),
        "Version the code base and bring it up to the full readability "
        "standard.",
    ),
    (
        "modularity",
        "modifiability",
        "The source code is partially modular",
        "The code is fully modular, split into components of limited "
        "functionality",
        "Modular systems allow changes in one part without the risk of "
        "breaking another.",
        ("-", "min", "min", "min", "full"),
        "Split the code into small components of limited functionality.",
    ),
    (
        "testability",
        "modifiability",
        "Test coverage is at least 20%",
        "Test coverage is at least 80%",
        "Test coverage directly affects robustness and the ease of safe "
        "modification.",
        ("-", "min", "min", "min", "full"),
        "Raise automated test coverage to at least 80%.",
    ),
    (
        "operability",
        "modifiability",
        "The system is deployed on a service",
        "The system can be disabled, updated and reverted",
        "Production systems need their state altered quickly when "
        "deployments go wrong.",
        ("min", "min", "full", "full", "full"),
        "Make the deployment controllable so the system can be disabled, "
        "updated and reverted.",
    ),
    (
        "discoverability",
        "comprehensibility",
        None,
        "The system is deployed in an accessible registry",
        "Discoverable systems can be audited, and new users can find and "
        "reuse their value.",
        ("-", "-", "full", "full", "full"),
        "Register the system in an accessible registry.",
    ),
    (
        "readability",
        "comprehensibility",
        "Variable names are meaningful",
        "The code is fully modular and follows a unified code style",
        "Readable code is what makes the system maintainable, modifiable "
        "and extensible in practice.",
        ("-", "-", "min", "min", "full"),
        "Adopt a unified code style with meaningful names across the code "
        "base.",
    ),
    (
        "traceability",
        "comprehensibility",
        "Metadata is partially logged",
        "Metadata and artifacts of the ML life-cycle are fully logged",
        "Reproducing a production system requires visibility into the "
        "exact conditions it was built under.",
        ("-", "-", "min", "full", "full"),
        "Log all metadata and artifacts produced across the ML life-cycle.",
    ),
    (
        "understandability",
        "comprehensibility",
        "The system has partial documentation",
        "The system has complete documentation",
        "Documentation is what lets users trust the system and lets "
        "contributors maintain it.",
        ("min", "min", "full", "full", "full"),
        "Complete the system documentation.",
    ),
    (
        "explainability",
        "responsibility",
        None,
        "The system's predictions are explainable",
        "Explaining how predictions come about is key to stakeholder "
        "trust.",
        ("-", "-", "-", "full", "full"),
        "Add an explanation mechanism for the system's predictions.",
    ),
    (
        "fairness",
        "responsibility",
        None,
        "The system has been checked against undesired biases and none "
        "were identified",
        "Predictions can drive irreversible decisions, so they must not be "
        "driven by undesired biases.",
        ("full", "full", "full", "full", "full"),
        "Check the system for undesired biases and remove any that are "
        "found.",
    ),
    (
        "ownership",
        "responsibility",
        None,
        "A team is appointed to maintain the system",
        "An appointed owner guarantees somebody maintains the system when "
        "issues arise.",
        ("full", "full", "full", "full", "full"),
        "Appoint an owning team responsible for maintaining the system.",
    ),
    (
        "standards_compliance",
        "responsibility",
        None,
        "Compliance standards, such as PII data handling, are met",
        "Adherence to the applicable regulatory standards is essential for "
        "the system's long-term viability.",
        ("full", "full", "full", "full", "full"),
        "Review the applicable compliance standards, such as PII handling, "
        "and meet them.",
    ),
    (
        "vulnerability",
        "responsibility",
        None,
        "Bots are filtered out from the input data",
        "Bot traffic adds noise that harms performance and opens the "
        "system to data poisoning.",
        ("full", "full", "full", "full", "full"),
        "Filter bot traffic out of the system's input data.",
    ),
)
