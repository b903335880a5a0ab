from fractions import Fraction
import hashlib
import json
import logging
import os
from queue import Empty, Queue
import sys
import threading
import traceback

from a5verify.exactfield import AlgebraicNumber
from a5verify.fpgroups import CosetBudgetExceeded
from a5verify.groups import Perm
from a5verify.linalg import IntMatrix
from a5verify.linalg import Matrix
import yaml

logger = logging.getLogger(__name__)
logging.basicConfig()

REPORT_SCHEMA = 'report-v1'

EXIT_PASS = 0
EXIT_FAILURE = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET = 3

INPUT_ERRORS = (ValueError, yaml.YAMLError, OSError)


def check_result(passed, output='', values=None, reason=None):
    """Return value of a check function."""
    return {
        'status': 'pass' if passed else 'fail',
        'output': output,
        'values': values or {},
        'reason': reason or ('' if passed else 'check failed'),
        'returncode': EXIT_PASS if passed else EXIT_FAILURE,
    }


def skipped(reason):
    return {
        'status': 'skipped',
        'output': reason,
        'values': {},
        'reason': reason,
        'returncode': NotImplemented,
    }


def job(name, function, depends=()):
    return {'name': name, 'function': function, 'depends': set(depends)}


def get_ready_job(jobs):
    for job_ in jobs:
        if not job_['depends']:
            jobs.remove(job_)
            return job_
    return None


def execute_jobs(
    jobs, show_progress=False, number_of_workers=10, debug_jobs=False
):
    """Run the checks on a thread pool, returning results in job order."""
    from a5verify.streams import stdout
    if debug_jobs:
        logger.setLevel(logging.DEBUG)

    names = [j['name'] for j in jobs]
    if len(names) != len(set(names)):
        raise RuntimeError('Checks share a name: %s' % ', '.join(names))
    results = {}

    job_queue = Queue()
    result_queue = Queue()

    workers = []
    for _ in range(min(number_of_workers, len(jobs))):
        worker = Worker(job_queue, result_queue)
        workers.append(worker)

    pending_jobs = list(jobs)
    running = []

    def fill():
        while job_queue.qsize() < len(workers):
            job_ = get_ready_job(pending_jobs)
            if not job_:
                break
            running.append(job_['name'])
            logger.debug("started '%s'" % job_['name'])
            job_queue.put(job_)

    fill()
    logger.debug('ongoing %s' % running)

    [w.start() for w in workers]

    while len(results) < len(jobs):
        (job_, result) = result_queue.get()
        logger.debug("finished '%s'" % job_['name'])
        running.remove(job_['name'])
        if show_progress and len(jobs) > 1:
            if result['returncode'] == NotImplemented:
                stdout.write('s')
            elif result['returncode'] != EXIT_PASS:
                stdout.write('E')
            else:
                stdout.write('.')
            if debug_jobs:
                stdout.write('\n')
            stdout.flush()
        result['name'] = job_['name']
        results[job_['name']] = result
        for pending_job in pending_jobs:
            if job_['name'] in pending_job['depends']:
                pending_job['depends'].discard(job_['name'])
                if result['returncode'] != EXIT_PASS:
                    # dependents of a failed check are not run
                    pending_job['function'] = _blocked(job_['name'])
        fill()
        if not running and len(results) < len(jobs):
            raise RuntimeError(
                'Checks with unsatisfiable dependencies: %s' %
                ', '.join(j['name'] for j in pending_jobs))
        if running:
            logger.debug('ongoing %s' % running)
    if show_progress and len(jobs) > 1 and not debug_jobs:
        print('', file=stdout)  # finish progress line

    for w in workers:
        w.done = True
    [w.join() for w in workers]
    return [results[name] for name in names]


def _blocked(name):
    def function():
        return skipped("Check '%s' did not pass" % name)
    return function


class Worker(threading.Thread):

    def __init__(self, job_queue, result_queue):
        super(Worker, self).__init__()
        self.daemon = True
        self.done = False
        self.job_queue = job_queue
        self.result_queue = result_queue

    def run(self):
        while not self.done:
            try:
                job_ = self.job_queue.get(timeout=0.1)
                result = self.process_job(job_)
                self.result_queue.put((job_, result))
            except Empty:
                pass

    def process_job(self, job_):
        try:
            return job_['function']()
        except CosetBudgetExceeded as e:
            return _error_result(e, EXIT_BUDGET)
        except INPUT_ERRORS as e:
            return _error_result(e, EXIT_INPUT_ERROR)
        except Exception as e:
            exc_tb = sys.exc_info()[2]
            filename, lineno, _, _ = traceback.extract_tb(exc_tb)[-1]
            return _error_result(
                e, EXIT_FAILURE, ' (%s:%s)' % (filename, lineno))


def _error_result(e, returncode, location=''):
    reason = '%s: %s%s' % (type(e).__name__, e, location)
    return {
        'status': 'fail',
        'output': reason,
        'values': {},
        'reason': reason,
        'returncode': returncode,
    }


def exit_code(results):
    codes = {r['returncode'] for r in results}
    for code in (EXIT_BUDGET, EXIT_INPUT_ERROR, EXIT_FAILURE):
        if code in codes:
            return code
    return EXIT_PASS


def output_result(result):
    from a5verify.streams import stdout
    output = result['output']
    if result['returncode'] == NotImplemented:
        if output:
            output = ansi('yellowf') + output + ansi('reset')
    elif result['returncode'] != EXIT_PASS:
        if not output:
            output = 'Failed with return code %d' % result['returncode']
        output = ansi('redf') + output + ansi('reset')
    print(
        ansi('bluef') + '=== ' +
        ansi('boldon') + result['name'] + ansi('boldoff') +
        ' (' + result['status'] + ') ===' + ansi('reset'),
        file=stdout)
    if output:
        try:
            print(output, file=stdout)
        except UnicodeEncodeError:
            print(
                output.encode(sys.getdefaultencoding(), 'replace'),
                file=stdout)


def output_results(results, output_handler=output_result):
    for result in results:
        output_handler(result)


def report_value(value, digits=30):
    """JSON form of a check value, exact numbers with a decimal rendering."""
    if isinstance(value, AlgebraicNumber):
        return {'exact': value.to_json(), 'decimal': value.to_decimal(digits)}
    if isinstance(value, Matrix):
        return [[report_value(x, digits) for x in row] for row in value.rows]
    if isinstance(value, IntMatrix):
        return [list(row) for row in value.rows]
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Perm):
        return str(value)
    if isinstance(value, dict):
        return {
            str(k): report_value(v, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [report_value(x, digits) for x in value]
    if value is None or isinstance(value, (bool, int, str)):
        return value
    return str(value)


def inputs_digest(argv, paths=()):
    digest = hashlib.sha256()
    for arg in argv:
        digest.update(arg.encode('utf-8'))
        digest.update(b'\0')
    for path in paths:
        with open(path, 'rb') as h:
            digest.update(h.read())
    return digest.hexdigest()


def run_report(command, digest, results, wall_time, digits=30):
    return {
        'schema': REPORT_SCHEMA,
        'command': command,
        'inputs_digest': digest,
        'checks': [
            {
                'name': r['name'],
                'status': r['status'],
                'reason': r['reason'],
                'values': report_value(r['values'], digits),
            } for r in results],
        'wall_time': wall_time,
    }


def output_report(report):
    from a5verify.streams import stdout
    print(json.dumps(report, indent=2, sort_keys=True), file=stdout)


USE_COLOR = hasattr(sys.stdout, 'isatty') and sys.stdout.isatty()
# disable color on Windows except if ConEmuANSI is explicitly enabled
if os.name == 'nt' and os.environ.get('ConEmuANSI', None) != 'ON':
    USE_COLOR = False


def ansi(keyword):
    if not USE_COLOR:
        return ''
    codes = {
        'bluef': '\033[34m',
        'boldon': '\033[1m',
        'boldoff': '\033[22m',
        'cyanf': '\033[36m',
        'redf': '\033[31m',
        'reset': '\033[0m',
        'yellowf': '\033[33m',
    }
    if keyword in codes:
        return codes[keyword]
    return ''
