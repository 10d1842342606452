"""Birational witness certificates: loading, exact verification and reduction mod p."""
from .certificate import (SCHEMA_VERSION, CertificateError, WitnessCertificate,
                          certificate_from_dict, certificate_to_dict, dump_certificate,
                          load_certificate, recovery_names)
from .modular import BadPrime, PrimeResult, bad_primes, check_prime, modular_sweep, reduce_mod_p
from .verify import (FAIL, INCONCLUSIVE, PASS, CheckResult, RecoveryEvaluator,
                     VerificationReport, verify_center, verify_certificate, verify_dagger,
                     verify_ddagger, verify_generation)
from .shipped import shipped_certificate, shipped_path, SHIPPED

__all__ = [
    "SCHEMA_VERSION", "CertificateError", "WitnessCertificate", "certificate_from_dict",
    "certificate_to_dict", "dump_certificate", "load_certificate", "recovery_names", "BadPrime",
    "PrimeResult", "bad_primes", "check_prime", "modular_sweep", "reduce_mod_p", "FAIL",
    "INCONCLUSIVE", "PASS", "CheckResult", "RecoveryEvaluator", "VerificationReport",
    "verify_center", "verify_certificate", "verify_dagger", "verify_ddagger",
    "verify_generation", "shipped_certificate", "shipped_path", "SHIPPED",
]
