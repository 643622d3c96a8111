
from .context import waveguidepy

import unittest
import os
import tempfile
from unittest import mock


class TestWGTask(unittest.TestCase):
    """Tests for initializing WGTask object"""

    @classmethod
    def setUpClass(cls):
        """Create simple .par file for testing"""
        cls.taskname = 'testtask'
        cls.tmpdir = tempfile.mkdtemp()

        wTxt = ('infile,s,a,,,,"Name"\nnumber,r,q,2.0,0,10,"Fraction"\n'
                'kind,s,h,"fock","fock|gauss",,"Kind"\nclobber,b,h,no,,,"Overwrite?"')
        cls.pfile = os.path.join(cls.tmpdir, f'{cls.taskname}.par')
        with open(cls.pfile, 'w') as fp: fp.write(wTxt)

        cls.pfiles = os.environ.get('WGPFILES', None)
        os.environ['WGPFILES'] = cls.tmpdir

    @classmethod
    def tearDownClass(cls):
        os.remove(cls.pfile)
        os.rmdir(cls.tmpdir)
        if cls.pfiles is None:
            del os.environ['WGPFILES']
        else:
            os.environ['WGPFILES'] = cls.pfiles


    # no name given -> fail
    def test__init_WGTask__noName(self):
        with self.assertRaises(waveguidepy.WGTaskException):
            waveguidepy.WGTask()

    # no .par file -> fail
    def test__init_WGTask__noPfile(self):
        with self.assertRaises(waveguidepy.WGTaskException):
            waveguidepy.WGTask('no-such-task')

    # case: initilize by kwargs
    def test__init_WGTask__kwargs(self):
        wgt  = waveguidepy.WGTask(self.taskname)
        wgt(infile='IN_FILE', number=4, do_exec=False)
        self.assertEqual(wgt.params['infile'], 'IN_FILE')
        self.assertEqual(wgt.params['number'], 4)
        self.assertIsInstance(wgt.params['number'], float)

    # case: initilize by another WGTask object
    def test__init_WGTask__anotherWGTask(self):
        wgt  = waveguidepy.WGTask(self.taskname)
        wgt(infile='IN_FILE', number=4, do_exec=False)
        wgt2 = waveguidepy.WGTask(self.taskname)
        wgt2(wgt, do_exec=False)
        self.assertEqual(wgt.params, wgt2.params)

    # case: initilize by dict
    def test__init_WGTask__dict(self):
        wgt  = waveguidepy.WGTask(self.taskname)
        wgt({'number':4, 'infile':'IN_FILE'}, do_exec=False)
        self.assertEqual(wgt.params['infile'], 'IN_FILE')
        self.assertEqual(wgt.params['number'], 4)

    # case: query one parameter
    def test__init_WGTask__query1(self):
        with mock.patch('builtins.input', lambda _: '5.0'):
            wgt  = waveguidepy.WGTask(self.taskname)
            wgt(infile='IN_FILE', do_exec=False)
        self.assertEqual(wgt.params['infile'], 'IN_FILE')
        self.assertEqual(wgt.params['number'], 5.0)

    # a bad answer is asked again
    def test__init_WGTask__queryRetry(self):
        answers = iter(['20', 'abc', '3'])
        with mock.patch('builtins.input', lambda _: next(answers)):
            with mock.patch('builtins.print'):
                wgt  = waveguidepy.WGTask(self.taskname)
                wgt(infile='IN_FILE', do_exec=False)
        self.assertEqual(wgt.params['number'], 3.0)

    # required parameter not given and no prompting
    def test__init_WGTask__noprompt(self):
        wgt  = waveguidepy.WGTask(self.taskname)
        with self.assertRaises(waveguidepy.ValidationError):
            wgt(number=1, noprompt=True, do_exec=False)

    # unknown parameter
    def test__init_WGTask__unknown(self):
        wgt  = waveguidepy.WGTask(self.taskname)
        with self.assertRaises(waveguidepy.ValidationError):
            wgt(infile='IN_FILE', number=1, colour='red', do_exec=False)

    # case: fill params by hand
    def test__init_WGTask__byHand(self):
        wgt  = waveguidepy.WGTask(self.taskname)
        wgt.infile = 'INFILE'
        wgt.number = 1
        wgt(do_exec=False, noprompt=True)
        self.assertEqual(wgt.params['infile'], 'INFILE')
        self.assertEqual(wgt.params['number'], 1.0)

    # bounds and enumerations from the .par file
    def test__init_WGTask__bounds(self):
        wgt  = waveguidepy.WGTask(self.taskname)
        with self.assertRaises(waveguidepy.ValidationError):
            wgt(infile='IN_FILE', number=11, do_exec=False)
        with self.assertRaises(waveguidepy.ValidationError):
            wgt.kind = 'coherent'
        wgt.kind = 'gauss'
        self.assertEqual(wgt.kind.value, 'gauss')

    # base class has no exec_task
    def test__init_WGTask__exec(self):
        wgt  = waveguidepy.WGTask(self.taskname)
        with self.assertRaises(NotImplementedError):
            wgt(infile='IN_FILE', number=1, noprompt=True)

    # docs are generated from the .par file
    def test__init_WGTask__docs(self):
        wgt  = waveguidepy.WGTask(self.taskname)
        self.assertIn('infile', wgt.__doc__)
        self.assertIn('Fraction', wgt.__doc__)

    # a subclass task writes to the captured log
    def test__WGTask__subclass(self):

        class EchoTask(waveguidepy.WGTask):
            name = self.taskname
            def exec_task(self):
                self.logger.info(f"echo {self.params['infile']}")
                out, err = self.logger.output
                return waveguidepy.WGResult(0, out, err, self.params)

        result = EchoTask()(infile='IN_FILE', noprompt=True, verbose=0)
        self.assertEqual(result.returncode, 0)
        self.assertEqual(result.output[0], 'echo IN_FILE')
        self.assertEqual(result.params['clobber'], 'no')
        self.assertIn('Return Code: 0', str(result))

    # a subclass name must match the requested name
    def test__WGTask__nameMismatch(self):

        class OtherTask(waveguidepy.WGTask):
            name = self.taskname

        with self.assertRaises(waveguidepy.WGTaskException):
            OtherTask('different')


class TestParamType(unittest.TestCase):
    """Tests for reading parameters"""

    def test__param_type__b(self):
        # this is a yes/no string
        test_result = waveguidepy.WGParam.param_type('', 'b')
        self.assertIsInstance(test_result, str)

    def test__param_type__f(self):
        test_result = waveguidepy.WGParam.param_type('', 'f')
        self.assertIsInstance(test_result, str)

    def test__param_type__i(self):
        test_result = waveguidepy.WGParam.param_type('', 'i')
        self.assertIsInstance(test_result, int)

    def test__param_type__r(self):
        test_result = waveguidepy.WGParam.param_type('', 'r')
        self.assertIsInstance(test_result, float)

    def test__param_type__r_INDEF(self):
        test_result = waveguidepy.WGParam.param_type('INDEF', 'r')
        self.assertEqual(test_result, 'INDEF')

    def test__param_type__s(self):
        test_result = waveguidepy.WGParam.param_type('', 's')
        self.assertIsInstance(test_result, str)

    def test__param_type__bYes(self):
        test_result = waveguidepy.WGParam.param_type('yes', 'b')
        self.assertEqual(test_result, 'yes')

    def test__param_type__bTrue(self):
        test_result = waveguidepy.WGParam.param_type(True, 'b')
        self.assertEqual(test_result, 'yes')

    def test__param_type__bFalse(self):
        test_result = waveguidepy.WGParam.param_type('false', 'b')
        self.assertEqual(test_result, 'no')

    def test__param_type__rInt(self):
        test_result = waveguidepy.WGParam.param_type(3, 'r')
        self.assertIsInstance(test_result, float)

    def test__param_type__sNumber(self):
        test_result = waveguidepy.WGParam.param_type(2, 's')
        self.assertEqual(test_result, '2')

    def test__param_type__bad(self):
        with self.assertRaises(waveguidepy.ValidationError):
            waveguidepy.WGParam.param_type('abc', 'r')

    def test__param_type__unknownType(self):
        with self.assertRaises(ValueError):
            waveguidepy.WGParam.param_type('1', 'x')


class TestParam(unittest.TestCase):
    """Tests for parsing .par lines"""

    def test__param__line(self):
        par = waveguidepy.WGParam('tau_points,i,h,401,2,,"Number of time points"')
        self.assertEqual(par.pname, 'tau_points')
        self.assertEqual(par.value, 401)
        self.assertEqual(par.prompt, 'Number of time points')

    def test__param__commaPrompt(self):
        par = waveguidepy.WGParam('scenario,s,h,"one-one",,,"one-one, two-zero, or noon-N"')
        self.assertEqual(par.value, 'one-one')
        self.assertEqual(par.prompt, 'one-one, two-zero, or noon-N')

    def test__param__validate(self):
        par = waveguidepy.WGParam('loss_ratio,r,h,0.0,0,,"Loss"')
        par.validate(0.5)
        with self.assertRaises(waveguidepy.ValidationError):
            par.validate(-0.1)

    def test__param__enum(self):
        par = waveguidepy.WGParam('method,s,h,"analytic","analytic|numeric|both",,"Method"')
        par.validate('both')
        with self.assertRaises(waveguidepy.ValidationError):
            par.validate('fast')


class TestExceptions(unittest.TestCase):
    """The error taxonomy"""

    def test__exceptions__hierarchy(self):
        for exc in [waveguidepy.DomainError, waveguidepy.PreconditionError,
                    waveguidepy.StructuralError, waveguidepy.NumericalDomainError,
                    waveguidepy.TruncationError, waveguidepy.ResourceGuardError,
                    waveguidepy.ConfigError, waveguidepy.PresetError]:
            self.assertTrue(issubclass(exc, waveguidepy.ValidationError))
            self.assertTrue(issubclass(exc, ValueError))
        self.assertTrue(issubclass(waveguidepy.AccuracyError, waveguidepy.WGTaskException))
        self.assertFalse(issubclass(waveguidepy.AccuracyError, waveguidepy.ValidationError))

    def test__exceptions__truncation(self):
        err = waveguidepy.TruncationError('too small', required_n_max=12)
        self.assertEqual(err.required_n_max, 12)

    def test__exceptions__preset(self):
        err = waveguidepy.PresetError('unknown material preset')
        self.assertIsInstance(err, KeyError)
        self.assertEqual(str(err), 'unknown material preset')


if __name__ == '__main__':
    unittest.main()
