import logging

from settings.logging_config import configure_logging


def test_log_file_receives_debug_records(tmp_path):
    target = tmp_path / "scan.log"
    configure_logging("WARNING", str(target))
    logging.getLogger("orbit.saturation_service").debug("weight 1,-1 sampled")
    for handler in logging.getLogger().handlers:
        handler.flush()
    assert "weight 1,-1 sampled" in target.read_text(encoding="utf-8")
    configure_logging("WARNING")


def test_sympy_logger_is_quiet():
    configure_logging("DEBUG")
    assert logging.getLogger("sympy").level == logging.WARNING
    assert not logging.getLogger("sympy").propagate
