

VALID_LOG_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}
VALID_ENVIRONMENTS = {"development", "test", "production"}


def validate_log_level(level: str) -> bool:
    
    return isinstance(level, str) and level.upper() in VALID_LOG_LEVELS


def validate_environment(env: str) -> bool:
    
    return isinstance(env, str) and env.lower() in VALID_ENVIRONMENTS
