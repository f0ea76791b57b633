from ridemin.anlz.summary import read_reports, reports_to_frame, summarize, write_summary
