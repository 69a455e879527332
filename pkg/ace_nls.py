"""Command-line entry point: generate, validate, query and facts subcommands."""

# imports
import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, NoReturn, Optional, TextIO

# local imports
from modules.ace_language import ace_language
from modules.af3_model import af3_model
from modules.factbase import factbase
from modules.generator import generator
from modules.query import query
from utilities import exception_handler, setup
from utilities.custom_error import NlsError

# setup logging
log: logging.Logger = logging.getLogger(name="log." + __name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_VALIDATION_ERROR = 2


class CliArgumentParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with the input-error status instead of 2."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(file=sys.stderr)
        self.exit(status=EXIT_INPUT_ERROR, message=f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class CliConfig:
    """
    Settings of one command run.

    Attributes:
        command (str): generate, validate, query or facts.
        input_path (Path): model file (.xml) or, for validate, the .ace document.
        output_path (Optional[Path]): output file; stdout when None.
        sections (tuple[str, ...]): nonempty subset of datatypes, architecture, automata.
        lexicon_path (Optional[Path]): user lexicon file (--lexicon, else ACE_NLS_LEXICON).
        strict (bool): treat ignored XML elements as errors.
        question (Optional[str]): question for query; None starts the interactive loop.
        verbose (bool): log at DEBUG level.
    """

    command: str
    input_path: Path
    output_path: Optional[Path] = None
    sections: tuple[str, ...] = generator.SECTIONS
    lexicon_path: Optional[Path] = None
    strict: bool = False
    question: Optional[str] = None
    verbose: bool = False


def _sections(value: str) -> tuple[str, ...]:
    sections = tuple(dict.fromkeys(part.strip() for part in value.split(",") if part.strip()))
    unknown = [section for section in sections if section not in generator.SECTIONS]
    if not sections or unknown:
        raise argparse.ArgumentTypeError(
            f"expected a comma-separated subset of {', '.join(generator.SECTIONS)}, got '{value}'"
        )
    return sections


def build_parser() -> CliArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--lexicon", type=Path, default=None, help="user lexicon file (default: $ACE_NLS_LEXICON)")
    common.add_argument("--strict", action="store_true", help="fail on XML elements that would be ignored")
    common.add_argument("--verbose", action="store_true", help="log debug messages to stderr")

    parser = CliArgumentParser(
        prog="ace_nls",
        description="Translate AutoFocus3-style XML models into checked ACE sentences and answer questions.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    generate = subparsers.add_parser("generate", parents=[common], help="write the ACE document of a model")
    generate.add_argument("input", type=Path, help="model XML file")
    generate.add_argument("--output", "-o", type=Path, default=None, help="output .ace file (default: stdout)")
    generate.add_argument(
        "--sections",
        type=_sections,
        default=generator.SECTIONS,
        help="comma-separated sections: datatypes,architecture,automata (default: all)",
    )

    validate = subparsers.add_parser("validate", parents=[common], help="check and read every sentence of an .ace document")
    validate.add_argument("input", type=Path, help=".ace document")

    ask = subparsers.add_parser("query", parents=[common], help="answer a question about a model")
    ask.add_argument("input", type=Path, help="model XML file")
    ask.add_argument("question", nargs="?", default=None, help="ACE question; reads questions from stdin if absent")

    facts = subparsers.add_parser("facts", parents=[common], help="list the facts of a model")
    facts.add_argument("input", type=Path, help="model XML file")
    facts.add_argument("--output", "-o", type=Path, default=None, help="output file (default: stdout)")

    return parser


def config_from_args(args: argparse.Namespace) -> CliConfig:
    lexicon_path = args.lexicon
    if lexicon_path is None and setup.DEFAULT_LEXICON_PATH:
        lexicon_path = Path(setup.DEFAULT_LEXICON_PATH)
    return CliConfig(
        command=args.command,
        input_path=args.input,
        output_path=getattr(args, "output", None),
        sections=getattr(args, "sections", generator.SECTIONS),
        lexicon_path=lexicon_path,
        strict=args.strict,
        question=getattr(args, "question", None),
        verbose=args.verbose,
    )


def session_lexicon(config: CliConfig) -> ace_language.Lexicon:
    lexicon = ace_language.default_lexicon()
    if config.lexicon_path is not None:
        lexicon = ace_language.load_lexicon_file(path=config.lexicon_path, lexicon=lexicon)
    return lexicon


def _write(text: str, output_path: Optional[Path], stdout: TextIO) -> None:
    if output_path is None:
        stdout.write(text)
        return
    try:
        output_path.write_text(text, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise NlsError(
            exception_type="OutputNotWritable",
            details=str(object=output_path),
            message=f"Cannot write output: {exc.strerror}.",
            status_code=EXIT_INPUT_ERROR,
        ) from exc


def cmd_generate(config: CliConfig, stdout: TextIO, stderr: TextIO) -> int:  # pylint: disable=W0613
    """
    Writes the generated document restricted to the selected sections.

    Returns:
        int: 0 on success. Model errors (1) and generation errors (2) propagate as NlsError.
    """
    lexicon = session_lexicon(config=config)
    model = af3_model.main(path=config.input_path, strict=config.strict)
    document = generator.generate_document(model=model, lexicon=lexicon, sections=config.sections)
    _write(text=document.render(), output_path=config.output_path, stdout=stdout)
    return EXIT_OK


def cmd_validate(config: CliConfig, stdout: TextIO, stderr: TextIO) -> int:
    """
    Checks and reads every sentence of an .ace document, printing one diagnostic line per failure.

    Returns:
        int: 0 when every sentence checks and reads unambiguously, 2 otherwise.
    """
    lexicon = session_lexicon(config=config)
    try:
        text = config.input_path.read_text(encoding="utf-8")
    except OSError as exc:
        raise NlsError(
            exception_type="NoSuchFile",
            details=str(object=config.input_path),
            message=f"no such file: {config.input_path}",
            status_code=EXIT_INPUT_ERROR,
        ) from exc
    except UnicodeDecodeError as exc:
        raise NlsError(
            exception_type="MalformedDocument",
            details=f"{config.input_path}, byte {exc.start}",
            message="Document is not valid UTF-8 text.",
            status_code=EXIT_INPUT_ERROR,
        ) from exc

    reading = ace_language.read_document(text=text, lexicon=lexicon)
    for diagnostic in reading.report.diagnostics:
        stderr.write(f"{config.input_path}:{diagnostic.render()}\n")

    if not reading.report.ok:
        stdout.write(f"{len(reading.report.diagnostics)} sentence(s) rejected.\n")
        return EXIT_VALIDATION_ERROR
    stdout.write(f"{len(reading.sentences)} sentence(s) ok.\n")
    return EXIT_OK


def cmd_query(
    config: CliConfig,
    stdout: TextIO,
    stderr: TextIO,
    stdin: TextIO = sys.stdin,
    error_handler: Callable = exception_handler.handle_nls_error,
) -> int:
    """
    Answers config.question, or every line read from stdin when no question is given.

    Returns:
        int: 0 when every question was answered, otherwise the status of the last failure (3 for query errors).
    """
    lexicon = session_lexicon(config=config)
    model = af3_model.main(path=config.input_path, strict=config.strict)
    facts = factbase.extract_facts(model=model)
    lexicon = query.lexicon_for(facts=facts, lexicon=lexicon)

    if config.question is not None:
        stdout.write(query.ask(text=config.question, facts=facts, lexicon=lexicon).text + "\n")
        return EXIT_OK

    status = EXIT_OK
    for line in stdin:
        question = line.strip()
        if not question:
            continue
        try:
            stdout.write(query.ask(text=question, facts=facts, lexicon=lexicon).text + "\n")
        except NlsError as exc:
            error_response, status = error_handler(exc=exc)
            stderr.write(error_response + "\n")
        stdout.flush()
    return status


def cmd_facts(config: CliConfig, stdout: TextIO, stderr: TextIO) -> int:  # pylint: disable=W0613
    """Lists the facts of a model, one `FactName(arg, ...)` per line in insertion order."""
    model = af3_model.main(path=config.input_path, strict=config.strict)
    lines = factbase.render_facts(fact_base=factbase.extract_facts(model=model))
    _write(text="".join(line + "\n" for line in lines), output_path=config.output_path, stdout=stdout)
    return EXIT_OK


COMMANDS: dict[str, Callable[..., int]] = {
    "generate": cmd_generate,
    "validate": cmd_validate,
    "query": cmd_query,
    "facts": cmd_facts,
}


def run(
    config: CliConfig,
    stdout: TextIO = sys.stdout,
    stderr: TextIO = sys.stderr,
    error_handler: Callable = exception_handler.handle_nls_error,
) -> int:
    """
    Runs one command and turns errors into a single diagnostic line on stderr.

    Returns:
        int: exit status: 0 success, 1 input or model error, 2 generation or validation error, 3 query error.
    """
    log.info(msg=f"Running {config.command} on {config.input_path}.")
    try:
        status = COMMANDS[config.command](config=config, stdout=stdout, stderr=stderr)

    except NlsError as exc:
        error_response, status = error_handler(exc=exc)
        stderr.write(error_response + "\n")

    except Exception as exc:  # pylint: disable=W0718
        log.exception(msg=f"{config.command} failed with an unhandled exception.")
        error_response, status = error_handler(exc=exc)
        stderr.write(error_response + "\n")

    log.info(msg=f"{config.command} finished with exit status {status}.")
    return status


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(args=argv)
    config = config_from_args(args=args)
    level = logging.DEBUG if config.verbose else setup.level_from_name(name=setup.LOG_LEVEL)
    setup.logger(level=level)
    return run(config=config)


if __name__ == "__main__":
    sys.exit(main())
