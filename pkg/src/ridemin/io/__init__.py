from ridemin.io.instance_file import read_instance, write_instance
from ridemin.io.instance_file import dumps as dump_instance, loads as load_instance
from ridemin.io.solution_file import read_solution, write_solution
from ridemin.io.solution_file import dumps as dump_solution, loads as load_solution
from ridemin.io.out import get_report_writer, read_report_csv
from ridemin.io.streams import open_text
