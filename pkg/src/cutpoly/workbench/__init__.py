from .generators import GeneratorSpec, generate
from .maxcut import MaxCutResult, maxcut_bruteforce
from .report import report, report_json

__all__ = ["GeneratorSpec", "generate", "MaxCutResult", "maxcut_bruteforce", "report", "report_json"]
