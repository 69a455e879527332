# flake8: noqa: F401, F402 # tests from test modules are called by unittest.main()

import unittest

import context
from ace_nls_tests import TestArguments, TestFacts, TestGenerate, TestQuery, TestValidate
from af3_model_tests import TestMain, TestParseArchitecture, TestParseDataDictionary
from checker_tests import TestAnalyse, TestCheckSentence, TestDiagnostic
from custom_error_tests import TestDefaultStatusCodes, TestNlsError
from exception_handler_tests import TestHandleNlsError
from factbase_tests import TestExtractFacts, TestFactBase
from generator_tests import TestGenerateDefinitions, TestGenerateDocument, TestLexicalizationPolicy
from lexicon_tests import TestDefaultLexicon, TestLexiconFile, TestRegisterContentWord
from query_tests import TestArchitectureQuestions, TestParseQuestion, TestTrafficLightQuestions
from reader_tests import TestParseSentence, TestReadDocument, TestReadingErrors
from round_trip_tests import TestQuerySoundness, TestRoundTrip
from tokenizer_tests import TestSentenceHelpers, TestTokenize

if __name__ == "__main__":
    # turn off logs for testing
    context.turn_off_logging(module="ace_nls")
    context.turn_off_logging(module="utilities.exception_handler")

    unittest.main()
