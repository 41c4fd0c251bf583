import logging
import config


def setup_logging(level=None, log_file=None):
    logger = logging.getLogger()
    logger.setLevel(logging.DEBUG)
    if logger.hasHandlers():
        logger.handlers.clear()
    formatter = logging.Formatter('%(asctime)s %(levelname)s: %(message)s')

    # stderr only: stdout carries reports
    console_handler = logging.StreamHandler()
    console_handler.setLevel(level or config.LOG_LEVEL)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    log_file = log_file or config.LOG_FILE
    if log_file:
        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)
    return logger


if __name__ == "__main__":
    logger = setup_logging()
    logger.info("Logging has been configured successfully.")
